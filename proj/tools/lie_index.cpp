#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lie/principal.hpp"
#include "lie/reps.hpp"
#include "lie/root_system.hpp"
#include "lie/verify.hpp"

using json = nlohmann::ordered_json;
using namespace lie;

namespace {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw InputError("unknown format '" + s + "'");
}

std::vector<int> parse_weight_coords(const std::string& s) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw InputError("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad weight coordinate '" + item + "' in '" + s + "'");
        }
    }
    if (out.empty()) throw InputError("empty weight '" + s + "'");
    return out;
}

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
        if (i) os << ',';
        os << w.coords[i];
    }
    os << ']';
    return os.str();
}

std::string exponents_str(const std::vector<int>& e, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << sep;
        os << e[i];
    }
    return os.str();
}

// RFC-style quoting; only used when a field can hold commas or quotes.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

long effective_max_dim() {
    const char* env = std::getenv("LIE_INDEX_MAX_DIM");
    if (!env) return default_max_dim;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || v <= 0)
        throw InputError("LIE_INDEX_MAX_DIM must be a positive integer, got '" +
                         std::string(env) + "'");
    return v;
}

struct InfoRow {
    std::string type;
    int rank, dim, coxeter, dual_coxeter, dual_coxeter_of_dual, r;
    std::vector<int> exponents;
    int positive_roots, ht_theta, ht_theta_s;
};

InfoRow info_row(const RootSystem& rs) {
    return {to_string(rs.simple_type),
            rs.rank(),
            rs.dim_g,
            rs.h,
            rs.h_star,
            rs.h_star_dual,
            rs.r,
            rs.exponents,
            static_cast<int>(rs.positive_roots.size()),
            rs.theta.height(),
            rs.theta_s.height()};
}

json info_json(const InfoRow& i) {
    json j;
    j["type"] = i.type;
    j["rank"] = i.rank;
    j["dim"] = i.dim;
    j["coxeter"] = i.coxeter;
    j["dual_coxeter"] = i.dual_coxeter;
    j["dual_coxeter_of_dual"] = i.dual_coxeter_of_dual;
    j["r"] = i.r;
    j["exponents"] = i.exponents;
    j["positive_roots"] = i.positive_roots;
    j["ht_theta"] = i.ht_theta;
    j["ht_theta_s"] = i.ht_theta_s;
    return j;
}

int cmd_info(const std::string& type_arg, Format fmt) {
    RootSystem rs = RootSystem::build(parse_simple_type(type_arg));
    InfoRow i = info_row(rs);
    switch (fmt) {
        case Format::Text:
            std::cout << "type: " << i.type << "\n"
                      << "rank: " << i.rank << "\n"
                      << "dim: " << i.dim << "\n"
                      << "coxeter: " << i.coxeter << "\n"
                      << "dual_coxeter: " << i.dual_coxeter << "\n"
                      << "dual_coxeter_of_dual: " << i.dual_coxeter_of_dual << "\n"
                      << "r: " << i.r << "\n"
                      << "exponents: [" << exponents_str(i.exponents, ',') << "]\n"
                      << "positive_roots: " << i.positive_roots << "\n"
                      << "ht_theta: " << i.ht_theta << "\n"
                      << "ht_theta_s: " << i.ht_theta_s << "\n";
            break;
        case Format::Json:
            std::cout << info_json(i).dump(2) << "\n";
            break;
        case Format::Csv:
            std::cout << "type,rank,dim,coxeter,dual_coxeter,dual_coxeter_of_dual,r,"
                         "exponents,positive_roots,ht_theta,ht_theta_s\n"
                      << i.type << ',' << i.rank << ',' << i.dim << ',' << i.coxeter << ','
                      << i.dual_coxeter << ',' << i.dual_coxeter_of_dual << ',' << i.r << ','
                      << exponents_str(i.exponents, ' ') << ',' << i.positive_roots << ','
                      << i.ht_theta << ',' << i.ht_theta_s << "\n";
            break;
    }
    return 0;
}

int cmd_table(int max_rank, Format fmt) {
    std::vector<SimpleType> types = all_simple_types(max_rank);
    struct Row {
        std::string type, index, closed;
    };
    std::vector<Row> rows;
    for (SimpleType t : types) {
        RootSystem rs = RootSystem::build(t);
        IndexReport rep = principal_index(rs);
        rows.push_back({to_string(t), rep.value().get_str(), rat_str(table_index_value(t))});
    }
    switch (fmt) {
        case Format::Text: {
            std::cout << std::left << std::setw(6) << "type" << std::right << std::setw(10)
                      << "index" << std::setw(12) << "closed_form" << "\n";
            for (const Row& r : rows)
                std::cout << std::left << std::setw(6) << r.type << std::right << std::setw(10)
                          << r.index << std::setw(12) << r.closed << "\n";
            break;
        }
        case Format::Json: {
            json j;
            j["max_rank"] = max_rank;
            j["rows"] = json::array();
            for (const Row& r : rows)
                j["rows"].push_back({{"type", r.type}, {"index", r.index}, {"closed_form", r.closed}});
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "type,index,closed_form\n";
            for (const Row& r : rows)
                std::cout << r.type << ',' << r.index << ',' << r.closed << "\n";
            break;
    }
    return 0;
}

int cmd_index_system(const RootSystem& rs, Format fmt) {
    IndexReport rep = principal_index(rs);
    switch (fmt) {
        case Format::Text:
            std::cout << "type: " << to_string(rs.simple_type) << "\n"
                      << "index_closed: " << rat_str(rep.closed_form) << "\n"
                      << "index_heights: " << rat_str(rep.via_heights) << "\n"
                      << "index_exponents: " << rat_str(rep.via_exponents) << "\n"
                      << "agree: " << (rep.agree ? "true" : "false") << "\n";
            break;
        case Format::Json: {
            json j;
            j["type"] = to_string(rs.simple_type);
            j["index"] = {{"closed", rat_str(rep.closed_form)},
                          {"heights", rat_str(rep.via_heights)},
                          {"exponents", rat_str(rep.via_exponents)}};
            j["agree"] = rep.agree;
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "type,closed,heights,exponents,agree\n"
                      << to_string(rs.simple_type) << ',' << rat_str(rep.closed_form) << ','
                      << rat_str(rep.via_heights) << ',' << rat_str(rep.via_exponents) << ','
                      << (rep.agree ? "true" : "false") << "\n";
            break;
    }
    return 0;
}

int cmd_index_rep(const RootSystem& rs, const Weight& lambda, long max_dim, Format fmt) {
    Int dim = weyl_dim(rs, lambda);
    Rat dynkin = dynkin_index_rep(rs, lambda);
    Rat ave = ave_index_rep(rs, lambda);
    Int principal = principal_index_rep(rs, lambda, max_dim);
    switch (fmt) {
        case Format::Text:
            std::cout << "type: " << to_string(rs.simple_type) << "\n"
                      << "weight: " << weight_str(lambda) << "\n"
                      << "dim: " << dim.get_str() << "\n"
                      << "dynkin_index: " << rat_str(dynkin) << "\n"
                      << "ave_index: " << rat_str(ave) << "\n"
                      << "principal_index: " << principal.get_str() << "\n";
            break;
        case Format::Json: {
            json j;
            j["type"] = to_string(rs.simple_type);
            j["weight"] = lambda.coords;
            j["dim"] = dim.get_str();
            j["dynkin_index"] = rat_str(dynkin);
            j["ave_index"] = rat_str(ave);
            j["principal_index"] = principal.get_str();
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "type,weight,dim,dynkin_index,ave_index,principal_index\n"
                      << to_string(rs.simple_type) << ',' << csv_field(weight_str(lambda)) << ','
                      << dim.get_str() << ',' << rat_str(dynkin) << ',' << rat_str(ave) << ','
                      << principal.get_str() << "\n";
            break;
    }
    return 0;
}

int cmd_decompose(const RootSystem& rs, const Weight& lambda, long max_dim, Format fmt) {
    SL2Decomposition dec = sl2_decompose(rs, lambda, max_dim);
    switch (fmt) {
        case Format::Text: {
            std::cout << "type: " << to_string(rs.simple_type) << "\n"
                      << "weight: " << weight_str(lambda) << "\n"
                      << "dim: " << dec.dim.get_str() << "\n"
                      << "parts:\n";
            for (const SL2Part& p : dec.parts)
                std::cout << "  d=" << p.d << " multiplicity=" << p.multiplicity << "\n";
            break;
        }
        case Format::Json: {
            json j;
            j["type"] = to_string(rs.simple_type);
            j["weight"] = lambda.coords;
            j["dim"] = dec.dim.get_str();
            j["parts"] = json::array();
            for (const SL2Part& p : dec.parts)
                j["parts"].push_back({{"d", p.d}, {"multiplicity", p.multiplicity}});
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "type,weight,d,multiplicity\n";
            for (const SL2Part& p : dec.parts)
                std::cout << to_string(rs.simple_type) << ',' << csv_field(weight_str(lambda))
                          << ',' << p.d << ',' << p.multiplicity << "\n";
            break;
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& type_args, bool all, int max_rank,
               const std::vector<std::string>& identity_args, long max_dim, Format fmt) {
    std::vector<SimpleType> types;
    if (!type_args.empty()) {
        for (const std::string& s : type_args) types.push_back(parse_simple_type(s));
    } else {
        (void)all;  // no --type means the full list either way
        types = all_simple_types(max_rank);
    }
    std::vector<IdentityId> ids;
    for (const std::string& s : identity_args) ids.push_back(parse_identity(s));

    CheckOptions opts;
    opts.max_rank = max_rank;
    opts.max_dim = max_dim;
    std::vector<CheckResult> results;
    if (ids.empty()) {
        results = check_all(types, opts);
    } else {
        for (IdentityId id : all_identities) {
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
            for (SimpleType t : types)
                if (identity_applies(id, t)) results.push_back(check(id, t, opts));
        }
    }

    long passed = 0, skipped = 0, failed = 0;
    for (const CheckResult& r : results) {
        if (r.skipped)
            ++skipped;
        else if (r.passed)
            ++passed;
        else
            ++failed;
    }

    switch (fmt) {
        case Format::Text: {
            for (const CheckResult& r : results) {
                const char* tag = r.skipped ? "[skip]" : r.passed ? "[ ok ]" : "[FAIL]";
                std::cout << tag << ' ' << std::left << std::setw(22) << to_string(r.identity)
                          << ' ' << std::setw(4) << to_string(r.simple_type) << std::right;
                if (r.skipped)
                    std::cout << " (" << r.note << ")";
                else if (r.passed)
                    std::cout << ' ' << rat_str(r.lhs) << " = " << rat_str(r.rhs);
                else
                    std::cout << ' ' << rat_str(r.lhs) << " != " << rat_str(r.rhs) << " ("
                              << r.note << ")";
                std::cout << "\n";
            }
            std::cout << "passed " << passed << ", skipped " << skipped << ", failed " << failed
                      << "\n";
            break;
        }
        case Format::Json: {
            json j;
            j["checks"] = json::array();
            for (const CheckResult& r : results)
                j["checks"].push_back({{"identity", to_string(r.identity)},
                                       {"type", to_string(r.simple_type)},
                                       {"lhs", rat_str(r.lhs)},
                                       {"rhs", rat_str(r.rhs)},
                                       {"passed", r.passed},
                                       {"skipped", r.skipped},
                                       {"note", r.note}});
            j["summary"] = {{"passed", passed}, {"skipped", skipped}, {"failed", failed}};
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "identity,type,lhs,rhs,passed,skipped,note\n";
            for (const CheckResult& r : results)
                std::cout << to_string(r.identity) << ',' << to_string(r.simple_type) << ','
                          << rat_str(r.lhs) << ',' << rat_str(r.rhs) << ','
                          << (r.passed ? "true" : "false") << ','
                          << (r.skipped ? "true" : "false") << ',' << csv_field(r.note) << "\n";
            break;
        }
    }
    return failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact root-system and Dynkin-index calculator for the simple Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format / --max-dim appear after the subcommand too

    std::string format = "text";
    app.add_option("--format", format, "Output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    long max_dim_flag = -1;
    app.add_option("--max-dim", max_dim_flag,
                   "Refuse weight-system enumerations beyond this dimension "
                   "(default 1000000, or LIE_INDEX_MAX_DIM)");

    auto* info = app.add_subcommand("info", "Structural data of one root system");
    std::string info_type;
    info->add_option("type", info_type, "Simple type, e.g. A3, e6, G2")->required();

    auto* table = app.add_subcommand("table", "Principal sl2 index for every admissible type");
    int table_max_rank = 8;
    table->add_option("--max-rank", table_max_rank, "Rank bound for the classical families")
        ->check(CLI::Range(1, 64));

    auto* index = app.add_subcommand("index", "Dynkin indices (principal sl2, or one rep)");
    std::string index_type, index_weight;
    index->add_option("type", index_type, "Simple type")->required();
    index->add_option("--weight", index_weight,
                      "Dominant weight in fundamental coordinates, e.g. 1,0,2");

    auto* decompose =
        app.add_subcommand("decompose", "Restriction of a rep to the principal sl2");
    std::string dec_type, dec_weight;
    decompose->add_option("type", dec_type, "Simple type")->required();
    decompose->add_option("--weight", dec_weight, "Dominant weight in fundamental coordinates")
        ->required();

    auto* verify = app.add_subcommand("verify", "Check the index identities");
    std::vector<std::string> verify_types, verify_ids;
    bool verify_all = false;
    int verify_max_rank = 8;
    verify->add_option("--type", verify_types, "Restrict to these types (repeatable)");
    verify->add_flag("--all", verify_all, "All admissible types up to --max-rank (default)");
    verify->add_option("--identity", verify_ids, "Restrict to these identities (repeatable)");
    verify->add_option("--max-rank", verify_max_rank, "Rank bound for --all")
        ->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Format fmt = parse_format(format);
        long max_dim = max_dim_flag > 0 ? max_dim_flag : effective_max_dim();
        if (info->parsed()) return cmd_info(info_type, fmt);
        if (table->parsed()) return cmd_table(table_max_rank, fmt);
        if (index->parsed()) {
            RootSystem rs = RootSystem::build(parse_simple_type(index_type));
            if (index_weight.empty()) return cmd_index_system(rs, fmt);
            return cmd_index_rep(rs, Weight{parse_weight_coords(index_weight)}, max_dim, fmt);
        }
        if (decompose->parsed()) {
            RootSystem rs = RootSystem::build(parse_simple_type(dec_type));
            return cmd_decompose(rs, Weight{parse_weight_coords(dec_weight)}, max_dim, fmt);
        }
        if (verify->parsed())
            return cmd_verify(verify_types, verify_all, verify_max_rank, verify_ids, max_dim,
                              fmt);
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// Command-line front end: emits the valuation-dimension tables and the
// octonionic curvature checks in aligned ASCII or deterministic JSON.
//
// Exit status: 0 success, 1 computation error or failed identity check,
// 2 usage error (unknown command, malformed option or weight string).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "valspin/lie_typeb.hpp"
#include "valspin/octgeo.hpp"
#include "valspin/valdim.hpp"

namespace {

using valspin::BaseRep;
using valspin::Coeff;
using valspin::Decomposition;
using valspin::HighestWeight;
using valspin::KlainCheckReport;
using valspin::LaurentPolynomial;
using valspin::Space;
using ojson = nlohmann::ordered_json;

// Raised while turning option strings into typed inputs; mapped to exit 2.
struct UsageFailure {
    std::string message;
};

// ---------------------------------------------------------------- helpers --

ojson json_int(const Coeff& c) {
    static const Coeff lo = std::numeric_limits<std::int64_t>::min();
    static const Coeff hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return c.convert_to<std::int64_t>();
    return c.str();
}

ojson weight_json(const HighestWeight& w) {
    ojson arr = ojson::array();
    for (const auto& s : w.entry_strings()) arr.push_back(s);
    return arr;
}

// Doubled exponent entries as exact strings ("2", "-3/2").
ojson exponent_json(const std::vector<int>& doubled) {
    ojson arr = ojson::array();
    for (int d : doubled) {
        if (d % 2 == 0) {
            arr.push_back(std::to_string(d / 2));
        } else {
            arr.push_back(std::to_string(d) + "/2");
        }
    }
    return arr;
}

// Terms in descending lexicographic order (leading term first).
ojson terms_json(const LaurentPolynomial& p) {
    ojson arr = ojson::array();
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        ojson term;
        term["exponent"] = exponent_json(it->first.doubled);
        term["coefficient"] = json_int(it->second);
        arr.push_back(std::move(term));
    }
    return arr;
}

// Summands in the descending lexicographic order the tables are printed in.
ojson summands_json(const Decomposition& d) {
    ojson arr = ojson::array();
    const auto& parts = d.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        ojson s;
        s["weight"] = weight_json(it->first);
        s["mult"] = json_int(it->second);
        arr.push_back(std::move(s));
    }
    return arr;
}

std::string format_curvature(double k) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", k);
    std::string s = buf;
    if (s.find_first_of(".einf") == std::string::npos) s += ".0";
    return s;
}

std::vector<double> parse_coords(const std::string& csv, const std::string& flag) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string entry;
    while (std::getline(in, entry, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(entry, &used));
            while (used < entry.size() && std::isspace(static_cast<unsigned char>(entry[used]))) ++used;
            if (used != entry.size()) throw UsageFailure{"malformed coordinate '" + entry + "' in " + flag};
        } catch (const std::invalid_argument&) {
            throw UsageFailure{"malformed coordinate '" + entry + "' in " + flag};
        } catch (const std::out_of_range&) {
            throw UsageFailure{"coordinate '" + entry + "' out of range in " + flag};
        }
    }
    if (out.empty()) throw UsageFailure{"no coordinates given in " + flag};
    return out;
}

HighestWeight parse_weight_or_usage(const std::string& text) {
    try {
        return HighestWeight::parse(text);
    } catch (const valspin::ArgumentError& e) {
        throw UsageFailure{std::string(e.what())};
    }
}

std::size_t algebra_rank(const std::string& algebra) {
    return algebra == "B3" ? 3 : 4;
}

LaurentPolynomial rep_character(std::size_t rank, const std::string& rep) {
    if (rep == "standard") return valspin::base_character(rank, BaseRep::standard);
    if (rep == "spin") return valspin::base_character(rank, BaseRep::spin);
    // "sum": the standard-plus-spin character used for the so(7) tables.
    return valspin::base_character(rank, BaseRep::standard) +
           valspin::base_character(rank, BaseRep::spin);
}

void emit(const ojson& doc) { std::cout << doc.dump(2) << "\n"; }

ojson make_doc(const std::string& command, ojson inputs, ojson result) {
    ojson doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["result"] = std::move(result);
    return doc;
}

// Aligned integer grid with k\l headers.
void print_grid(const std::vector<std::vector<Coeff>>& rows, int size) {
    std::cout << "k\\l";
    for (int l = 0; l < size; ++l) std::cout << std::setw(5) << l;
    std::cout << "\n";
    for (int k = 0; k < size; ++k) {
        std::cout << std::setw(3) << k;
        for (int l = 0; l < size; ++l) {
            std::cout << std::setw(5) << rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)].str();
        }
        std::cout << "\n";
    }
}

// Deterministic uniform/gaussian draws built on the standardized mt19937_64
// output (std distributions are implementation-defined, which would break
// byte-identical reruns across library versions).
double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& gen) {
    double u1 = uniform01(gen);
    while (u1 <= 0.0) u1 = uniform01(gen);
    const double u2 = uniform01(gen);
    static const double two_pi = 2.0 * std::acos(-1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

// Random orthonormal pair in R^dim via Gram-Schmidt.
std::pair<std::vector<double>, std::vector<double>> random_plane(std::mt19937_64& gen,
                                                                 std::size_t dim) {
    auto draw = [&] {
        std::vector<double> v(dim);
        for (double& x : v) x = gaussian(gen);
        return v;
    };
    auto norm = [](const std::vector<double>& v) {
        double s = 0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };
    std::vector<double> u, w;
    for (;;) {
        u = draw();
        const double nu = norm(u);
        if (nu < 1e-6) continue;
        for (double& x : u) x /= nu;
        w = draw();
        double ip = 0;
        for (std::size_t t = 0; t < dim; ++t) ip += u[t] * w[t];
        for (std::size_t t = 0; t < dim; ++t) w[t] -= ip * u[t];
        const double nw = norm(w);
        if (nw < 1e-6) continue;
        for (double& x : w) x /= nw;
        return {u, w};
    }
}

std::string space_name(Space s) {
    switch (s) {
        case Space::cpn: return "cpn";
        case Space::hpn: return "hpn";
        default: return "op2";
    }
}

ojson check_json(const KlainCheckReport& rep) {
    ojson j;
    j["identity"] = rep.identity;
    j["curvature"] = rep.curvature;
    j["combination"] = rep.combination;
    j["difference"] = rep.difference;
    j["passed"] = rep.passed;
    return j;
}

void print_check(const KlainCheckReport& rep, const std::string& label) {
    std::cout << (rep.passed ? "[PASS] " : "[FAIL] ") << rep.identity;
    if (!label.empty()) std::cout << " at " << label;
    std::cout << ": K = " << format_curvature(rep.curvature)
              << ", combination = " << format_curvature(rep.combination)
              << ", |diff| = " << std::scientific << std::setprecision(2) << rep.difference
              << std::defaultfloat << "\n";
}

// ----------------------------------------------------------- subcommands --

int run_char(bool json, const std::string& algebra, const std::string& weight_text) {
    const HighestWeight w = parse_weight_or_usage(weight_text);
    const std::size_t m = algebra_rank(algebra);
    if (w.rank() != m) {
        throw UsageFailure{"weight has " + std::to_string(w.rank()) + " entries but " +
                           algebra + " needs " + std::to_string(m)};
    }
    const LaurentPolynomial c = valspin::weyl_character(m, w);
    const Coeff dim = valspin::weyl_dim(m, w);
    if (json) {
        ojson inputs;
        inputs["algebra"] = algebra;
        inputs["weight"] = weight_json(w);
        ojson result;
        result["dimension"] = json_int(dim);
        result["term_count"] = c.term_count();
        result["terms"] = terms_json(c);
        emit(make_doc("char", std::move(inputs), std::move(result)));
    } else {
        std::cout << "Char(Gamma_" << w.to_string() << ") over " << algebra
                  << ": dimension " << dim << ", " << c.term_count() << " terms\n"
                  << c.to_string() << "\n";
    }
    return 0;
}

int run_exterior(bool json, const std::string& algebra, const std::string& rep, int k) {
    if (k < 0 || k > 32) throw UsageFailure{"--k must be between 0 and 32"};
    const std::size_t m = algebra_rank(algebra);
    const LaurentPolynomial base = rep_character(m, rep);
    const LaurentPolynomial lam = valspin::exterior_power_char(base, k);
    const Coeff dim = lam.evaluate_at_one();
    if (json) {
        ojson inputs;
        inputs["algebra"] = algebra;
        inputs["rep"] = rep;
        inputs["k"] = k;
        ojson result;
        result["k"] = k;
        result["dimension"] = json_int(dim);
        result["term_count"] = lam.term_count();
        result["terms"] = terms_json(lam);
        emit(make_doc("exterior", std::move(inputs), std::move(result)));
    } else {
        std::cout << "Lambda^" << k << "(" << rep << ") over " << algebra
                  << ": dimension " << dim << ", " << lam.term_count() << " terms\n";
        if (auto lead = lam.leading_term()) {
            std::cout << "leading term: "
                      << LaurentPolynomial::monomial(lead->exponent, lead->coefficient).to_string()
                      << "\n";
        } else {
            std::cout << "zero character\n";
        }
    }
    return 0;
}

int run_decompose(bool json, const std::string& algebra, const std::string& rep, int k) {
    if (k < 0 || k > 32) throw UsageFailure{"--k must be between 0 and 32"};
    const std::size_t m = algebra_rank(algebra);
    const LaurentPolynomial base = rep_character(m, rep);
    const Decomposition dec = valspin::decompose(valspin::exterior_power_char(base, k), m);
    if (json) {
        ojson inputs;
        inputs["algebra"] = algebra;
        inputs["rep"] = rep;
        inputs["k"] = k;
        ojson result;
        result["k"] = k;
        result["summands"] = summands_json(dec);
        emit(make_doc("decompose", std::move(inputs), std::move(result)));
    } else {
        const auto& parts = dec.parts();
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            std::cout << "Gamma_" << it->first.to_string() << " x " << it->second << "\n";
        }
        std::cout << "total dimension " << valspin::dimension(dec)
                  << " in " << dec.summand_count() << " summands\n";
    }
    return 0;
}

int run_bk(bool json, bool has_k, int k) {
    if (json) {
        ojson inputs;
        ojson result;
        if (has_k) {
            inputs["k"] = k;
            result["k"] = k;
            result["value"] = json_int(valspin::compute_bk(k));
        } else {
            ojson values = ojson::array();
            for (int i = 0; i <= 16; ++i) values.push_back(json_int(valspin::compute_bk(i)));
            result["values"] = std::move(values);
        }
        emit(make_doc("bk", std::move(inputs), std::move(result)));
    } else if (has_k) {
        std::cout << valspin::compute_bk(k) << "\n";
    } else {
        for (int i = 0; i <= 16; ++i) std::cout << (i ? " " : "") << valspin::compute_bk(i);
        std::cout << "\n";
    }
    return 0;
}

int run_bkl(bool json, bool has_k, int k, bool has_l, int l, bool full) {
    if (has_k != has_l) throw UsageFailure{"--k and --l must be given together"};
    if (has_k) {
        const Coeff v = valspin::compute_bkl(k, l);
        if (json) {
            ojson inputs;
            inputs["k"] = k;
            inputs["l"] = l;
            ojson result;
            result["k"] = k;
            result["l"] = l;
            result["value"] = json_int(v);
            emit(make_doc("bkl", std::move(inputs), std::move(result)));
        } else {
            std::cout << v << "\n";
        }
        return 0;
    }
    const int size = full ? 16 : 8;
    std::vector<std::vector<Coeff>> rows(static_cast<std::size_t>(size),
                                         std::vector<Coeff>(static_cast<std::size_t>(size)));
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = valspin::compute_bkl(a, b);
    if (json) {
        ojson inputs;
        inputs["full"] = full;
        ojson result;
        result["size"] = size;
        ojson jrows = ojson::array();
        for (const auto& row : rows) {
            ojson jrow = ojson::array();
            for (const auto& v : row) jrow.push_back(json_int(v));
            jrows.push_back(std::move(jrow));
        }
        result["rows"] = std::move(jrows);
        emit(make_doc("bkl", std::move(inputs), std::move(result)));
    } else {
        print_grid(rows, size);
    }
    return 0;
}

int run_valdim(bool json, bool has_k, int k) {
    if (has_k && (k < 0 || k > 16)) throw UsageFailure{"--k must be between 0 and 16"};
    if (json) {
        ojson inputs;
        ojson result;
        if (has_k) {
            inputs["k"] = k;
            result["k"] = k;
            result["value"] = json_int(valspin::val_dimension(k));
        } else {
            ojson values = ojson::array();
            Coeff total = 0;
            for (int i = 0; i <= 16; ++i) {
                const Coeff v = valspin::val_dimension(i);
                values.push_back(json_int(v));
                total += v;
            }
            result["dimensions"] = std::move(values);
            result["total"] = json_int(total);
        }
        emit(make_doc("valdim", std::move(inputs), std::move(result)));
    } else if (has_k) {
        std::cout << valspin::val_dimension(k) << "\n";
    } else {
        for (int i = 0; i <= 16; ++i) std::cout << (i ? " " : "") << valspin::val_dimension(i);
        std::cout << "\n";
    }
    return 0;
}

int run_report(bool json) {
    const valspin::ValuationReport rep = valspin::full_report();
    if (json) {
        ojson result;
        ojson dims = ojson::array();
        for (const auto& d : rep.dimensions) dims.push_back(json_int(d));
        result["dimensions"] = std::move(dims);
        result["total"] = json_int(rep.total);
        ojson bk = ojson::array();
        for (const auto& b : rep.bk) bk.push_back(json_int(b));
        result["bk"] = std::move(bk);
        ojson bkl = ojson::array();
        for (const auto& row : rep.bkl) {
            ojson jrow = ojson::array();
            for (const auto& v : row) jrow.push_back(json_int(v));
            bkl.push_back(std::move(jrow));
        }
        result["bkl"] = std::move(bkl);
        ojson so7;
        ojson weights = ojson::array();
        for (const auto& w : rep.so7_weights) weights.push_back(weight_json(w));
        so7["weights"] = std::move(weights);
        ojson mults = ojson::array();
        for (const auto& row : rep.so7_mults) {
            ojson jrow = ojson::array();
            for (const auto& v : row) jrow.push_back(json_int(v));
            mults.push_back(std::move(jrow));
        }
        so7["multiplicities"] = std::move(mults);
        result["so7_table"] = std::move(so7);
        ojson spin9 = ojson::array();
        for (std::size_t k = 0; k < rep.spin9_summands.size(); ++k) {
            ojson entry;
            entry["k"] = k;
            entry["summands"] = summands_json(rep.spin9_summands[k]);
            spin9.push_back(std::move(entry));
        }
        result["spin9_decompositions"] = std::move(spin9);
        emit(make_doc("report", ojson::object(), std::move(result)));
        return 0;
    }

    std::cout << "dim Val_k^Spin(9) for k = 0..16:\n";
    for (std::size_t i = 0; i < rep.dimensions.size(); ++i) {
        std::cout << (i ? " " : "") << rep.dimensions[i];
    }
    std::cout << "\ntotal " << rep.total << "\n\n";

    std::cout << "b_k for k = 0..16:\n";
    for (std::size_t i = 0; i < rep.bk.size(); ++i) std::cout << (i ? " " : "") << rep.bk[i];
    std::cout << "\n\n";

    std::cout << "b_{k,l} for 0 <= k,l <= 7:\n";
    std::vector<std::vector<Coeff>> grid(8, std::vector<Coeff>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                rep.bkl[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    print_grid(grid, 8);
    std::cout << "\n";

    std::cout << "so(7) multiplicities in Lambda^i(O' + O), i = 0..7:\n";
    std::cout << std::left << std::setw(15) << "weight" << std::right;
    for (int i = 0; i < 8; ++i) std::cout << std::setw(4) << i;
    std::cout << "\n";
    for (std::size_t row = 0; row < rep.so7_weights.size(); ++row) {
        std::cout << std::left << std::setw(15) << rep.so7_weights[row].to_string() << std::right;
        for (int i = 0; i < 8; ++i) {
            std::cout << std::setw(4) << rep.so7_mults[row][static_cast<std::size_t>(i)].str();
        }
        std::cout << "\n";
    }
    return 0;
}

int run_curvature(bool json, const std::string& space_text, const std::string& u_text,
                  const std::string& v_text) {
    const std::vector<double> u = parse_coords(u_text, "--u");
    const std::vector<double> v = parse_coords(v_text, "--v");
    double k = 0;
    Space space;
    if (space_text == "cpn") {
        space = Space::cpn;
        k = valspin::sectional_curvature_cpn(u, v);
    } else if (space_text == "hpn") {
        space = Space::hpn;
        k = valspin::sectional_curvature_hpn(u, v);
    } else {
        space = Space::op2;
        if (u.size() != 16 || v.size() != 16) {
            throw UsageFailure{"op2 takes 16 coordinates per vector (first 8 = first octonion)"};
        }
        valspin::TangentPlanePair plane;
        for (std::size_t t = 0; t < 8; ++t) {
            plane.u.first.c[t] = u[t];
            plane.u.second.c[t] = u[8 + t];
            plane.v.first.c[t] = v[t];
            plane.v.second.c[t] = v[8 + t];
        }
        k = valspin::sectional_curvature_op2(plane);
    }
    if (json) {
        ojson inputs;
        inputs["space"] = space_name(space);
        inputs["u"] = u;
        inputs["v"] = v;
        ojson result;
        result["curvature"] = k;
        emit(make_doc("curvature", std::move(inputs), std::move(result)));
    } else {
        std::cout << format_curvature(k) << "\n";
    }
    return 0;
}

int run_check(bool json, const std::string& space_text, const std::string& u_text,
              const std::string& v_text, int samples, std::uint64_t seed, int dim) {
    const bool has_plane = !u_text.empty() || !v_text.empty();
    if (has_plane && (u_text.empty() || v_text.empty())) {
        throw UsageFailure{"--u and --v must be given together"};
    }

    Space space = space_text == "cpn" ? Space::cpn
                : space_text == "hpn" ? Space::hpn
                                      : Space::op2;

    std::vector<std::pair<std::string, KlainCheckReport>> checks;
    ojson inputs;
    inputs["space"] = space_text;

    if (has_plane) {
        const std::vector<double> u = parse_coords(u_text, "--u");
        const std::vector<double> v = parse_coords(v_text, "--v");
        inputs["u"] = u;
        inputs["v"] = v;
        checks.emplace_back("the given plane", valspin::klain_identity_check(space, u, v));
    } else if (space == Space::op2) {
        // The two planes with tabulated octonionic pseudo-volume.
        valspin::TangentPlanePair a{{valspin::Octonion::unit(0), {}},
                                    {valspin::Octonion::unit(1), {}}};
        valspin::TangentPlanePair b{{valspin::Octonion::unit(0), {}},
                                    {{}, valspin::Octonion::unit(0)}};
        checks.emplace_back("span{(1,0),(e1,0)}", valspin::klain_identity_check(a));
        checks.emplace_back("span{(1,0),(0,1)}", valspin::klain_identity_check(b));
    } else {
        if (samples < 1) throw UsageFailure{"--samples must be positive"};
        if (space == Space::cpn && (dim < 4 || dim % 2 != 0)) {
            throw UsageFailure{"cpn needs an even --dim of at least 4"};
        }
        if (space == Space::hpn && (dim < 4 || dim % 4 != 0)) {
            throw UsageFailure{"hpn needs a --dim divisible by 4, at least 4"};
        }
        inputs["samples"] = samples;
        inputs["seed"] = seed;
        inputs["dim"] = dim;
        std::mt19937_64 gen(seed);
        for (int s = 0; s < samples; ++s) {
            auto [u, v] = random_plane(gen, static_cast<std::size_t>(dim));
            checks.emplace_back("sample " + std::to_string(s),
                                valspin::klain_identity_check(space, u, v));
        }
    }

    bool all_passed = true;
    double max_diff = 0;
    for (const auto& [label, rep] : checks) {
        all_passed = all_passed && rep.passed;
        max_diff = std::max(max_diff, rep.difference);
    }

    if (json) {
        ojson result;
        result["identity"] = checks.front().second.identity;
        result["checks"] = ojson::array();
        for (const auto& [label, rep] : checks) {
            ojson c = check_json(rep);
            c["plane"] = label;
            result["checks"].push_back(std::move(c));
        }
        result["all_passed"] = all_passed;
        result["max_difference"] = max_diff;
        emit(make_doc("check", std::move(inputs), std::move(result)));
    } else if (checks.size() > 4) {
        std::cout << checks.front().second.identity << "\n"
                  << (all_passed ? "[PASS] " : "[FAIL] ") << checks.size()
                  << " random planes in R^" << dim << ", max |diff| = " << std::scientific
                  << std::setprecision(2) << max_diff << std::defaultfloat << "\n";
    } else {
        for (const auto& [label, rep] : checks) print_check(rep, label);
    }

    if (!all_passed) {
        std::cerr << "identity check failed (max |diff| = " << max_diff << ")\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin(9)-invariant valuation dimensions and octonionic curvature checks"};
    app.require_subcommand(1);

    bool json = false;
    std::string algebra = "B4";
    app.add_flag("--json", json, "emit a single JSON document instead of ASCII");
    app.add_option("--algebra", algebra, "Lie algebra: B3 = so(7), B4 = so(9)")
        ->check(CLI::IsMember({"B3", "B4"}));

    std::string weight_text;
    auto* cmd_char = app.add_subcommand("char", "irreducible character of a highest weight");
    cmd_char->fallthrough();
    cmd_char->add_option("--weight", weight_text, "comma-separated entries, each 'p' or 'p/2'")
        ->required();

    std::string rep = "spin";
    int degree_k = 0;
    auto* cmd_ext = app.add_subcommand("exterior", "exterior power of a base representation");
    cmd_ext->fallthrough();
    cmd_ext->add_option("--rep", rep, "base representation: standard, spin, or sum")
        ->check(CLI::IsMember({"standard", "spin", "sum"}));
    cmd_ext->add_option("--k", degree_k, "exterior power degree")->required();

    std::string drep = "spin";
    int dk = 0;
    auto* cmd_dec = app.add_subcommand("decompose", "decompose an exterior power into irreducibles");
    cmd_dec->fallthrough();
    cmd_dec->add_option("--rep", drep, "base representation: standard, spin, or sum")
        ->check(CLI::IsMember({"standard", "spin", "sum"}));
    cmd_dec->add_option("--k", dk, "exterior power degree")->required();

    int bk_k = 0;
    auto* cmd_bk = app.add_subcommand("bk", "b_k = trivial-rep multiplicity in Lambda^k of the spin rep");
    cmd_bk->fallthrough();
    auto* bk_opt = cmd_bk->add_option("--k", bk_k, "single degree (default: all of k = 0..16)");

    int bkl_k = 0, bkl_l = 0;
    bool bkl_full = false;
    auto* cmd_bkl = app.add_subcommand("bkl", "the pairing table b_{k,l}");
    cmd_bkl->fallthrough();
    auto* bkl_kopt = cmd_bkl->add_option("--k", bkl_k, "row index");
    auto* bkl_lopt = cmd_bkl->add_option("--l", bkl_l, "column index");
    cmd_bkl->add_flag("--full", bkl_full, "print the full 16x16 table instead of the 8x8 corner");

    int vd_k = 0;
    auto* cmd_vd = app.add_subcommand("valdim", "dim Val_k^Spin(9)");
    cmd_vd->fallthrough();
    auto* vd_opt = cmd_vd->add_option("--k", vd_k, "single degree (default: all of k = 0..16)");

    auto* cmd_rep = app.add_subcommand("report", "all tables: dimensions, b_k, b_{k,l}, so(7) multiplicities");
    cmd_rep->fallthrough();

    std::string cu_space, cu_u, cu_v;
    auto* cmd_curv = app.add_subcommand("curvature", "sectional curvature of a tangent 2-plane");
    cmd_curv->fallthrough();
    cmd_curv->add_option("space", cu_space, "cpn, hpn, or op2")
        ->required()
        ->check(CLI::IsMember({"cpn", "hpn", "op2"}));
    cmd_curv->add_option("--u", cu_u, "comma-separated coordinates of the first spanning vector")
        ->required();
    cmd_curv->add_option("--v", cu_v, "comma-separated coordinates of the second spanning vector")
        ->required();

    std::string ck_space, ck_u, ck_v;
    int ck_samples = 100;
    std::uint64_t ck_seed = 0;
    int ck_dim = 0;
    auto* cmd_check = app.add_subcommand("check", "verify the curvature/Klain-function identity");
    cmd_check->fallthrough();
    cmd_check->add_option("space", ck_space, "cpn, hpn, or op2")
        ->required()
        ->check(CLI::IsMember({"cpn", "hpn", "op2"}));
    cmd_check->add_option("--u", ck_u, "check one plane: first spanning vector");
    cmd_check->add_option("--v", ck_v, "check one plane: second spanning vector");
    cmd_check->add_option("--samples", ck_samples, "random planes to sample (cpn/hpn, default 100)");
    cmd_check->add_option("--seed", ck_seed, "random seed (default 0)");
    cmd_check->add_option("--dim", ck_dim, "ambient real dimension (default: 4 for cpn, 8 for hpn)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_char->parsed()) return run_char(json, algebra, weight_text);
        if (cmd_ext->parsed()) return run_exterior(json, algebra, rep, degree_k);
        if (cmd_dec->parsed()) return run_decompose(json, algebra, drep, dk);
        if (cmd_bk->parsed()) return run_bk(json, bk_opt->count() > 0, bk_k);
        if (cmd_bkl->parsed())
            return run_bkl(json, bkl_kopt->count() > 0, bkl_k, bkl_lopt->count() > 0, bkl_l, bkl_full);
        if (cmd_vd->parsed()) return run_valdim(json, vd_opt->count() > 0, vd_k);
        if (cmd_rep->parsed()) return run_report(json);
        if (cmd_curv->parsed()) return run_curvature(json, cu_space, cu_u, cu_v);
        if (cmd_check->parsed()) {
            if (ck_dim == 0) ck_dim = ck_space == "hpn" ? 8 : 4;
            return run_check(json, ck_space, ck_u, ck_v, ck_samples, ck_seed, ck_dim);
        }
        std::cerr << "usage error: no command given\n";
        return 2;
    } catch (const UsageFailure& e) {
        std::cerr << "usage error: " << e.message << "\n";
        return 2;
    } catch (const valspin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

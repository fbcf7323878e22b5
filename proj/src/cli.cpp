#include "thetalat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "thetalat/io.hpp"
#include "thetalat/jordan.hpp"
#include "thetalat/pencil.hpp"
#include "thetalat/theta_group.hpp"

namespace thetalat {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, "cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json validation_json(const ValidationReport& rep) {
    return json{{"ok", rep.ok()},
                {"violations", rep.violations},
                {"warnings", rep.warnings}};
}

std::vector<std::string> int_strings(const std::vector<Int>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(x.get_str());
    return out;
}

int cmd_analyze(const std::string& path, bool as_json, std::ostream& out) {
    InputDocument doc = parse_document(read_input(path));
    if (!doc.main)
        throw ParseError("$", "analyze needs a datum (mode, g, ...)");
    AHData d = to_ah_data(*doc.main);
    ValidationReport rep = validate(d);
    if (!rep.ok()) {
        if (as_json) {
            out << json{{"schema", 1}, {"validation", validation_json(rep)}}.dump(2) << "\n";
        } else {
            out << "validation: FAILED\n";
            for (const auto& v : rep.violations)
                out << "  violation: " << v << "\n";
        }
        return 2;
    }

    SymplecticData s = symplectic_normal_form(make_alternating(alternating_part(d)));
    KGroup k = k_group(d);
    Int jordan = s.divisor_product();

    json j;
    j["schema"] = 1;
    j["validation"] = validation_json(rep);
    j["g"] = d.g;
    j["g0"] = s.g0();
    j["divisors"] = int_strings(s.divisors);
    j["k_group"] = json{{"dim_identity_component", k.dim_identity_component},
                        {"component_type", int_strings(k.components.divisors)},
                        {"component_order", k.components.order().get_str()}};
    j["jordan_constant"] = jordan.get_str();
    j["is_pic0"] = is_pic0(d);
    if (k.components.order() <= 64 && k.components.order() > 1) {
        std::vector<IntVec> elems = k.components.all_elements();
        json table = json::array();
        for (const auto& x : elems) {
            json row = json::array();
            for (const auto& y : elems)
                row.push_back(rational_str(pairing_eE(k.components, x, y)));
            table.push_back(std::move(row));
        }
        json elem_list = json::array();
        for (const auto& x : elems)
            elem_list.push_back(int_strings(x));
        j["pairing_elements"] = std::move(elem_list);
        j["pairing_table"] = std::move(table);
    }

    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << "validation: ok\n";
        for (const auto& w : rep.warnings)
            out << "  note: " << w << "\n";
        out << "g = " << d.g << ", g0 = " << s.g0() << "\n";
        out << "divisors:";
        for (const auto& di : s.divisors)
            out << " " << di.get_str();
        if (s.divisors.empty())
            out << " (none: form vanishes)";
        out << "\n";
        out << "K group: identity component of dimension " << k.dim_identity_component
            << ", component group of type (";
        for (size_t i = 0; i < k.components.divisors.size(); ++i)
            out << (i ? "," : "") << k.components.divisors[i].get_str();
        out << "), order " << k.components.order().get_str() << "\n";
        out << "jordan constant = " << jordan.get_str() << "\n";
        out << "pic0: " << (is_pic0(d) ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_pencil(const std::string& path, int range, bool assume_semipositive, bool as_json,
               std::ostream& out) {
    InputDocument doc = parse_document(read_input(path));
    if (!doc.pencil_base || !doc.pencil_dominating)
        throw ParseError("pencil", "pencil needs base and dominating data");
    AHData base = to_ah_data(*doc.pencil_base);
    AHData dom = to_ah_data(*doc.pencil_dominating);
    ValidationReport rb = validate(base);
    if (!rb.ok())
        throw std::invalid_argument("base: " + rb.violations.front());
    ValidationReport rd = validate(dom);
    if (!rd.ok())
        throw std::invalid_argument("dominating: " + rd.violations.front());
    CertificateOptions opts;
    opts.assume_semipositive = assume_semipositive;
    opts.n_max = range;
    Certificate cert = non_jordan_certificate(base, dom, opts);

    if (as_json) {
        json j;
        j["schema"] = 1;
        json hyp = json::array();
        for (const auto& h : cert.hypotheses)
            hyp.push_back(json{{"name", h.name}, {"status", h.status}});
        j["hypotheses"] = std::move(hyp);
        j["doubled"] = cert.doubled;
        j["det_polynomial"] = int_strings(cert.table.f.coeffs);
        j["strictly_increasing_past"] = cert.table.bound.get_str();
        json rows = json::array();
        for (const auto& r : cert.table.rows) {
            json row;
            row["n"] = r.n.get_str();
            row["degenerate"] = r.degenerate;
            if (!r.degenerate) {
                row["divisors"] = int_strings(r.divisors);
                row["jordan"] = r.jordan.get_str();
                row["f_n"] = r.f_n.get_str();
            }
            rows.push_back(std::move(row));
        }
        j["growth_table"] = std::move(rows);
        json inc = json::array();
        for (const auto& [n, jo] : cert.increasing_jordans)
            inc.push_back(json::array({n.get_str(), jo.get_str()}));
        j["increasing_jordans"] = std::move(inc);
        j["analytic_note"] = cert.analytic_note;
        out << j.dump(2) << "\n";
    } else {
        out << to_text(cert);
    }
    return 0;
}

std::vector<Int> parse_type(const std::string& s) {
    std::vector<Int> type;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            type.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw ParseError("--type", "bad integer '" + item + "'");
        }
    }
    if (type.empty())
        throw ParseError("--type", "empty divisor list");
    return type;
}

int cmd_heisenberg(const std::string& type_str, const std::string& m_str, bool brute,
                   int bound, bool as_json, std::ostream& out) {
    std::vector<Int> type = parse_type(type_str);
    std::optional<Int> m;
    if (!m_str.empty())
        m = Int(m_str);
    HeisenbergGroup h(type, m);
    Int closed = 1;
    for (const auto& d : type)
        closed *= d;
    Int order = h.order();

    json j;
    j["schema"] = 1;
    j["type"] = int_strings(type);
    j["m"] = h.central_order().get_str();
    j["order"] = order.get_str();
    j["closed_form"] = closed.get_str();

    std::string verdict;
    if (brute) {
        if (order > bound)
            throw std::invalid_argument("group order " + order.get_str() +
                                        " exceeds the enumeration bound " +
                                        std::to_string(bound));
        FiniteGroupTable t = make_table(h);
        JordanReport r = brute_force_jordan(t, bound);
        verdict = (r.constant == closed) ? "AGREE" : "DISAGREE";
        j["brute_force"] = json{{"constant", r.constant.get_str()},
                                {"witness_subgroup", r.witness_subgroup},
                                {"witness_abelian_normal", r.witness_abelian_normal},
                                {"verdict", verdict}};
    }

    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << "heisenberg type (" << type_str << "), central order "
            << h.central_order().get_str() << ", group order " << order.get_str() << "\n";
        out << "closed-form jordan constant = " << closed.get_str() << "\n";
        if (brute) {
            out << "brute-force jordan constant = " << j["brute_force"]["constant"].get<std::string>()
                << "  [" << verdict << "]\n";
        } else {
            out << "brute force skipped (pass --brute-force to enumerate)\n";
        }
    }
    return 0;
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

int cmd_verify(const std::string& path, bool as_json, std::ostream& out) {
    InputDocument doc = parse_document(read_input(path));
    if (!doc.main)
        throw ParseError("$", "verify needs a datum (mode, g, ...)");
    AHData d = to_ah_data(*doc.main);
    std::vector<Check> checks;

    ValidationReport rep = validate(d);
    bool hermitian_ok = true, integral_ok = true;
    for (const auto& v : rep.violations) {
        if (v.find("Hermitian") != std::string::npos)
            hermitian_ok = false;
        else if (v.find("integer") != std::string::npos)
            integral_ok = false;
    }
    bool structural = rep.ok();
    checks.push_back({"hermitian", hermitian_ok, ""});
    checks.push_back({"integrality", integral_ok, ""});
    if (!rep.ok() && hermitian_ok && integral_ok)
        checks.push_back({"structure", false, rep.violations.front()});

    std::mt19937_64 rng(0x7e7a1a7u);
    if (structural) {
        // kernel identity
        try {
            kernel_h(d);
            checks.push_back({"kernel-identity", true, ""});
        } catch (const std::invalid_argument& e) {
            checks.push_back({"kernel-identity", false, e.what()});
            structural = false;
        }
    }
    if (structural) {
        // semicharacter cocycle on random pairs
        std::uniform_int_distribution<int> coeff(-4, 4);
        bool ok = true;
        const Rational half = make_rational(1, 2);
        const IntMat e = alternating_part(d);
        for (int k = 0; k < 200 && ok; ++k) {
            IntVec l1(2 * d.g), l2(2 * d.g), sum(2 * d.g);
            for (int i = 0; i < 2 * d.g; ++i) {
                l1[i] = coeff(rng);
                l2[i] = coeff(rng);
                sum[i] = l1[i] + l2[i];
            }
            Rational e12 = 0;
            for (int i = 0; i < 2 * d.g; ++i)
                for (int jj = 0; jj < 2 * d.g; ++jj)
                    e12 += Rational(l1[i] * l2[jj] * e(i, jj));
            Rational lhs = alpha_eval(d, sum);
            Rational rhs = mod1(alpha_eval(d, l1) + alpha_eval(d, l2) + half * e12);
            ok = (lhs == rhs);
        }
        checks.push_back({"semicharacter-law", ok, ""});

        // commutator closed form against the four-fold product
        ThetaGroup tg(d);
        const DiscriminantGroup& disc = tg.discriminant();
        std::uniform_int_distribution<long> rnd(0, 1000000);
        auto random_element = [&]() {
            IntVec x = disc.zero();
            for (size_t i = 0; i < x.size(); ++i)
                x[i] = Int(rnd(rng)) % disc.divisors[i / 2];
            RatVec u = tg.coset_representative(x);
            for (const auto& rad : tg.symplectic().radical_basis) {
                Rational c = make_rational(rnd(rng) % 7 - 3, rnd(rng) % 3 + 1);
                for (size_t i = 0; i < u.size(); ++i)
                    u[i] += c * Rational(rad[i]);
            }
            FormalScalar s = root_of_unity(make_rational(rnd(rng) % 12, 12));
            return tg.make(s, u);
        };
        bool comm_ok = true;
        bool pic0_ok = true;
        for (int k = 0; k < 200 && comm_ok; ++k) {
            ThetaElement x = random_element(), y = random_element();
            try {
                FormalScalar c = tg.commutator(x, y);
                if (is_pic0(d) && !c.is_one())
                    pic0_ok = false;
            } catch (const std::logic_error& e) {
                comm_ok = false;
            }
        }
        checks.push_back({"commutator-identity", comm_ok, ""});
        if (is_pic0(d))
            checks.push_back({"pic0-commutative", pic0_ok, ""});

        // discriminant order against the Smith form of E
        SnfResult snf_e = snf(alternating_part(d));
        Int prod_snf = 1;
        for (int i = 0; i < snf_e.s.rows; ++i)
            if (snf_e.s(i, i) != 0)
                prod_snf *= snf_e.s(i, i);
        Int dp = tg.symplectic().divisor_product();
        checks.push_back({"k-group-order", prod_snf == dp * dp, ""});
    }

    bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    if (as_json) {
        json j;
        j["schema"] = 1;
        json cl = json::array();
        for (const auto& c : checks) {
            json e = json{{"name", c.name}, {"pass", c.pass}};
            if (!c.detail.empty())
                e["detail"] = c.detail;
            cl.push_back(std::move(e));
        }
        j["checks"] = std::move(cl);
        j["ok"] = all;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks)
            out << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        out << (all ? "all checks passed" : "some checks failed") << "\n";
    }
    return all ? 0 : 2;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice invariants of line bundles on complex tori"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;
    int range = 12;
    bool assume_semipositive = false;
    std::string type_str, m_str;
    bool brute = false;
    int bound = 512;

    CLI::App* analyze = app.add_subcommand("analyze", "invariants of one datum");
    analyze->add_option("path", path, "input file or - for stdin")->required();
    analyze->add_flag("--json", as_json, "machine-readable output");

    CLI::App* pencil = app.add_subcommand("pencil", "growth table and certificate");
    pencil->add_option("path", path, "input file or - for stdin")->required();
    pencil->add_option("--range", range, "table rows n = 1..N")->check(CLI::PositiveNumber);
    pencil->add_flag("--assume-semipositive", assume_semipositive,
                     "waive the semipositivity check in gram mode");
    pencil->add_flag("--json", as_json, "machine-readable output");

    CLI::App* heis = app.add_subcommand("heisenberg", "finite heisenberg model");
    heis->add_option("--type", type_str, "divisor chain d1,d2,...")->required();
    heis->add_option("--m", m_str, "central order (default lcm of divisors)");
    heis->add_flag("--brute-force", brute, "enumerate subgroups and compare");
    heis->add_option("--bound", bound, "enumeration bound")->check(CLI::PositiveNumber);
    heis->add_flag("--json", as_json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "invariant suite on user data");
    verify->add_option("path", path, "input file or - for stdin")->required();
    verify->add_flag("--json", as_json, "machine-readable output");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(path, as_json, out);
        if (pencil->parsed())
            return cmd_pencil(path, range, assume_semipositive, as_json, out);
        if (heis->parsed())
            return cmd_heisenberg(type_str, m_str, brute, bound, as_json, out);
        if (verify->parsed())
            return cmd_verify(path, as_json, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}

}  // namespace thetalat

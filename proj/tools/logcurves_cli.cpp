#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "logcurves/betti.hpp"
#include "logcurves/bv.hpp"
#include "logcurves/flc.hpp"
#include "logcurves/json_out.hpp"
#include "logcurves/logspace.hpp"
#include "logcurves/trees.hpp"
#include "logcurves/verify.hpp"
#include "logcurves/weights.hpp"

namespace lc = logcurves;
using lc::ojson;

namespace {

struct Report {
    ojson doc;
    std::string table;
    int exit_code = 0;
    bool streamed = false; // table already written to stdout line by line
};

ojson head(const std::string& command, ojson parameters) {
    ojson payload;
    payload["command"] = command;
    payload["parameters"] = std::move(parameters);
    return payload;
}

std::string coeff_list(const lc::Poly& p) {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) os << (k ? ", " : "") << p.coeff(k);
    os << "]";
    return os.str();
}

std::string count_list(const std::vector<lc::i64>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
    os << "]";
    return os.str();
}

void poly_line(std::ostringstream& tb, const std::string& label, const lc::Poly& p) {
    tb << std::left << std::setw(14) << label << coeff_list(p) << "   " << p.str() << "\n";
}

void verdict_line(std::ostringstream& tb, bool ok) { tb << "verdict: " << (ok ? "pass" : "FAIL") << "\n"; }

void descriptor_lines(std::ostringstream& tb, const char* side, const lc::NCLogDescriptor& d) {
    tb << side << ": " << d.base << "\n"
       << "  base_dim " << d.base_dim << ", fiber_dim " << d.fiber_dim() << ", log_dim " << d.log_dim() << "\n"
       << "  bundles:";
    for (const auto& b : d.bundles) tb << " " << b;
    tb << "\n";
}

void map_lines(std::ostringstream& tb, const lc::LogStructureMap& m) {
    descriptor_lines(tb, "source", m.source);
    descriptor_lines(tb, "target", m.target);
    tb << "stratum assignment (" << m.stratum_map.size() << " pair" << (m.stratum_map.size() == 1 ? "" : "s")
       << ", designated first):\n";
    size_t shown = 0;
    for (const auto& [s, t] : m.stratum_map) {
        if (shown++ == 12) {
            tb << "  ... " << (m.stratum_map.size() - 12) << " more\n";
            break;
        }
        tb << "  " << s << "  ->  " << t << "\n";
    }
    tb << "pullbacks:\n";
    for (const auto& [bundle, mono] : m.bundle_matching) tb << "  " << std::left << std::setw(16) << bundle << " <-  " << mono << "\n";
}

// ---------------------------------------------------------------------- strata

Report cmd_strata(int n, int codim, bool with_trees) {
    Report r;
    std::ostringstream tb;
    bool ok = true;

    ojson counts = ojson::array();
    tb << "stratum census, arity " << n << "\n";
    tb << " codim   count\n";
    const int lo = codim >= 0 ? codim : 0;
    const int hi = codim >= 0 ? codim : n - 2;
    ojson trees = ojson::array();
    for (int c = lo; c <= hi; ++c) {
        const auto& ts = lc::enumerate_trees(n, c);
        ok = ok && static_cast<lc::i64>(ts.size()) == lc::census_independent(n, c);
        ojson row;
        row["codim"] = c;
        row["count"] = ts.size();
        counts.push_back(std::move(row));
        tb << std::setw(6) << c << std::setw(8) << ts.size() << "\n";
        if (with_trees)
            for (const auto& t : ts) trees.push_back(lc::tree_json(t));
    }

    ojson params;
    params["n"] = n;
    if (codim >= 0) params["codim"] = codim;
    params["trees"] = with_trees;
    ojson payload = head("strata", params);
    payload["counts"] = std::move(counts);
    if (n >= 3) {
        lc::i64 formula = lc::codim_one_census(n);
        ok = ok && static_cast<lc::i64>(lc::enumerate_trees(n, 1).size()) == formula;
        payload["codim_one_formula"] = formula;
        tb << "codim-one bipartition count: " << formula << "\n";
    }
    if (with_trees) {
        payload["strata"] = std::move(trees);
        for (const auto& t : payload["strata"]) tb << "  " << t.at("key").get<std::string>() << "\n";
    }
    payload["verdict"] = ok ? "pass" : "fail";
    verdict_line(tb, ok);

    r.doc = lc::envelope("strata", std::move(payload));
    r.table = tb.str();
    r.exit_code = ok ? 0 : 1;
    return r;
}

// ------------------------------------------------------------------------- flc

Report cmd_flc_space(int n) {
    Report r;
    lc::FLCSpace sp = lc::flc_space(n);
    const bool ok = n == 1 ? (sp.base_dim() == 0 && sp.fiber_dim() == 1)
                           : (sp.base_dim() == n - 2 && sp.fiber_dim() == n + 1 && sp.log_dim() == 2 * n - 1);

    ojson params;
    params["n"] = n;
    ojson payload = head("flc space", params);
    payload["arity"] = sp.arity;
    ojson dims;
    dims["base"] = sp.base_dim();
    dims["fiber"] = sp.fiber_dim();
    dims["log"] = sp.log_dim();
    payload["dims"] = std::move(dims);
    payload["descriptor"] = lc::descriptor_json(sp.descriptor);
    payload["verdict"] = ok ? "pass" : "fail";

    std::ostringstream tb;
    tb << "framed-curve space, arity " << n << "\n";
    descriptor_lines(tb, "descriptor", sp.descriptor);
    tb << "strata: " << sp.descriptor.strata.size() << "\n";
    verdict_line(tb, ok);

    r.doc = lc::envelope("flc-space", std::move(payload));
    r.table = tb.str();
    r.exit_code = ok ? 0 : 1;
    return r;
}

Report cmd_flc_compose(int outer, int inner, int slot) {
    Report r;
    lc::LogStructureMap m = lc::flc_comp(inner, outer, slot);

    ojson params;
    params["outer"] = outer;
    params["inner"] = inner;
    params["slot"] = slot;
    ojson payload = head("flc compose", params);
    payload["map"] = lc::map_json(m);
    payload["verdict"] = "pass";

    std::ostringstream tb;
    tb << "composition: arity " << inner << " into slot " << slot << " of arity " << outer << "\n";
    map_lines(tb, m);
    verdict_line(tb, true);

    r.doc = lc::envelope("flc-compose", std::move(payload));
    r.table = tb.str();
    return r;
}

Report cmd_flc_theta(int n, int mark, const std::string& stratum) {
    Report r;
    lc::LogStructureMap m = lc::theta_log(n, mark, stratum);

    ojson params;
    params["n"] = n;
    params["mark"] = mark;
    if (!stratum.empty()) params["stratum"] = stratum;
    ojson payload = head("flc theta", params);
    payload["map"] = lc::map_json(m);
    payload["verdict"] = "pass";

    std::ostringstream tb;
    tb << "residue weight " << mark << " of the arity-" << n << " space\n";
    map_lines(tb, m);
    verdict_line(tb, true);

    r.doc = lc::envelope("flc-theta", std::move(payload));
    r.table = tb.str();
    return r;
}

Report cmd_flc_axioms(int max_arity) {
    Report r;
    lc::AxiomReport rep = lc::check_flc_axioms(max_arity);

    ojson params;
    params["max_arity"] = max_arity;
    ojson payload = head("flc axioms", params);
    payload["report"] = lc::axiom_report_json(rep);
    payload["verdict"] = rep.ok() ? "pass" : "fail";

    std::ostringstream tb;
    tb << "composition axiom sweep up to arity " << max_arity << "\n";
    tb << "cases: " << rep.cases << "\n";
    for (const auto& f : rep.failures) tb << "  failure: " << f << "\n";
    verdict_line(tb, rep.ok());

    r.doc = lc::envelope("flc-axioms", std::move(payload));
    r.table = tb.str();
    r.exit_code = rep.ok() ? 0 : 1;
    return r;
}

// ----------------------------------------------------------------------- betti

Report cmd_betti(const std::string& space, int n) {
    Report r;
    ojson params;
    params["space"] = space;
    params["n"] = n;
    std::ostringstream tb;

    if (space == "tables") {
        if (n < 3) throw std::invalid_argument("tables need n >= 3");
        lc::PoincareTables t = lc::poincare_tables(n);
        ojson payload = head("betti", params);
        payload["tables"] = lc::tables_json(t);
        payload["verdict"] = "pass";
        tb << "Poincare rows at n = " << n << " (mbar by mark count, the rest by arity)\n";
        poly_line(tb, "mbar", t.mbar);
        poly_line(tb, "flc-top", t.flc_top);
        poly_line(tb, "fld", t.fld);
        poly_line(tb, "ld", t.ld);
        verdict_line(tb, true);
        r.doc = lc::envelope("betti-tables", std::move(payload));
        r.table = tb.str();
        return r;
    }

    lc::Poly p;
    bool ok = true;
    if (space == "open") {
        if (n < 3) throw std::invalid_argument("the open row needs n >= 3 marks");
        p = lc::betti_open(n);
        tb << "Betti numbers of the open " << n << "-mark space\n";
    } else if (space == "mbar") {
        if (n < 3) throw std::invalid_argument("the stable row needs n >= 3 marks");
        p = lc::poincare_mbar(n);
        ok = p.palindromic() && p.coeff(0) == 1;
        tb << "Poincare polynomial of the stable " << n << "-mark space\n";
    } else if (space == "ld") {
        p = lc::poincare_ld(n);
        tb << "decorated row, arity " << n << "\n";
    } else if (space == "fld") {
        p = lc::poincare_fld(n);
        tb << "framed decorated row, arity " << n << "\n";
    } else if (space == "flc-top") {
        p = lc::poincare_flc_top(n);
        tb << "framed-curve top-weight row, arity " << n << "\n";
    } else {
        throw std::invalid_argument("unknown space: " + space);
    }
    ok = ok && p.nonnegative();

    ojson payload = head("betti", params);
    payload["poly"] = lc::poly_json(p);
    payload["verdict"] = ok ? "pass" : "fail";
    tb << "coefficients: " << coeff_list(p) << "\n";
    tb << "polynomial:   " << p.str() << "\n";
    verdict_line(tb, ok);

    r.doc = lc::envelope("betti", std::move(payload));
    r.table = tb.str();
    r.exit_code = ok ? 0 : 1;
    return r;
}

// ---------------------------------------------------------------------- purity

std::string row_identity(const std::vector<lc::i64>& row, lc::i64 total) {
    std::ostringstream os;
    for (size_t j = 0; j < row.size(); ++j) {
        if (j) os << (j % 2 ? " - " : " + ");
        os << row[j];
    }
    os << " = " << total;
    return os.str();
}

Report cmd_purity(int n) {
    Report r;
    lc::PurityReport rep = lc::purity_check(n);

    ojson params;
    params["n"] = n;
    ojson payload = head("purity", params);
    payload["report"] = lc::purity_json(rep);
    payload["verdict"] = rep.pass() ? "pass" : "fail";

    std::ostringstream tb;
    tb << "weight table, n = " << n << " marks (row q lists boundary Betti dims for codim j = q .. 0)\n";
    for (size_t q = 0; q < rep.page.rows.size(); ++q)
        tb << "  q=" << q << ":  " << row_identity(rep.page.rows[q], rep.page.alternating[q]) << "\n";
    tb << "open row: " << coeff_list(rep.open_betti) << "\n";
    tb << "primes: " << count_list(rep.primes) << "\n";
    tb << "point counts exact: " << (rep.counts_match ? "yes" : "NO") << "\n";
    tb << "alternating sums match: " << (rep.rows_match ? "yes" : "NO") << "\n";
    tb << "stable column matches: " << (rep.stable_column_match ? "yes" : "NO") << "\n";
    tb << "Euler characteristics match: " << (rep.euler_match ? "yes" : "NO") << "\n";
    tb << "certificate: " << rep.certificate_level << "\n";
    verdict_line(tb, rep.pass());

    r.doc = lc::envelope("purity", std::move(payload));
    r.table = tb.str();
    r.exit_code = rep.pass() ? 0 : 1;
    return r;
}

// --------------------------------------------------------------------- acyclic

Report cmd_acyclic(const std::string& family, int n) {
    Report r;
    lc::AcyclicityCertificate cert;
    if (family == "p1") {
        if (n < 1 || n > 30) throw std::invalid_argument("the marked line takes 1 <= n <= 30 points");
        cert = lc::acyclicity_p1(n);
    } else if (family == "flc") {
        if (n < 1 || n > 7) throw std::invalid_argument("the framed-curve certificate takes 1 <= n <= 7");
        cert = lc::acyclicity_flc(n);
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }

    ojson params;
    params["family"] = family;
    params["n"] = n;
    ojson payload = head("acyclic", params);
    payload["certificate"] = lc::acyclicity_json(cert);
    payload["verdict"] = cert.pass ? "pass" : "fail";

    std::ostringstream tb;
    tb << "acyclicity certificate: " << cert.family << ", parameter " << cert.parameter << "\n";
    tb << "hodge row: " << count_list(cert.hodge) << "\n";
    if (!cert.primes.empty()) tb << "primes: " << count_list(cert.primes) << "\n";
    tb << "certificate: " << cert.certificate_level << "\n";
    verdict_line(tb, cert.pass);

    r.doc = lc::envelope("acyclic", std::move(payload));
    r.table = tb.str();
    r.exit_code = cert.pass ? 0 : 1;
    return r;
}

// -------------------------------------------------------------------------- bv

ojson parse_json_arg(const std::string& s) {
    try {
        if (!s.empty() && s[0] == '@') {
            std::ifstream f(s.substr(1));
            if (!f) throw std::invalid_argument("cannot open " + s.substr(1));
            return ojson::parse(f);
        }
        return ojson::parse(s);
    } catch (const ojson::parse_error& e) {
        throw std::invalid_argument(std::string("bad expression JSON: ") + e.what());
    }
}

Report cmd_bv_dims(int n) {
    Report r;
    std::vector<lc::i64> dims = lc::bv_dims(n);
    std::vector<lc::i64> lie = lc::ger_dims(n);
    lc::Poly fld = lc::poincare_fld(n);
    lc::Poly ld = lc::poincare_ld(n);
    bool ok = static_cast<int>(dims.size()) == fld.degree() + 1 && static_cast<int>(lie.size()) == ld.degree() + 1;
    for (size_t k = 0; ok && k < dims.size(); ++k) ok = dims[k] == fld.coeff(static_cast<int>(k));
    for (size_t k = 0; ok && k < lie.size(); ++k) ok = lie[k] == ld.coeff(static_cast<int>(k));

    ojson params;
    params["n"] = n;
    ojson payload = head("bv dims", params);
    payload["dims"] = dims;
    payload["expected"] = fld.coeffs();
    payload["lie_dims"] = lie;
    payload["lie_expected"] = ld.coeffs();
    payload["verdict"] = ok ? "pass" : "fail";

    std::ostringstream tb;
    tb << "multilinear dimensions, arity " << n << "\n";
    tb << "dims:          " << count_list(dims) << "\n";
    tb << "framed row:    " << coeff_list(fld) << "\n";
    tb << "lie dims:      " << count_list(lie) << "\n";
    tb << "decorated row: " << coeff_list(ld) << "\n";
    verdict_line(tb, ok);

    r.doc = lc::envelope("bv-dims", std::move(payload));
    r.table = tb.str();
    r.exit_code = ok ? 0 : 1;
    return r;
}

void element_lines(std::ostringstream& tb, const lc::BVElement& e) {
    tb << "terms: " << e.terms.size() << "\n";
    for (const auto& [m, c] : e.terms)
        tb << "  " << std::left << std::setw(10) << c.str() << " " << m.str() << "  (degree " << m.degree() << ")\n";
    tb << "element: " << e.str() << "\n";
}

Report cmd_bv_eval(const std::string& expr) {
    Report r;
    lc::BVElement e = lc::bv_eval(lc::parse_bv_expr(parse_json_arg(expr)));

    ojson params;
    params["expr"] = expr;
    ojson payload = head("bv eval", params);
    payload["element"] = lc::bv_element_json(e);
    payload["verdict"] = "pass";

    std::ostringstream tb;
    element_lines(tb, e);
    verdict_line(tb, true);

    r.doc = lc::envelope("bv-eval", std::move(payload));
    r.table = tb.str();
    return r;
}

Report cmd_bv_compose(const std::string& outer, const std::string& inner, int slot) {
    Report r;
    lc::BVElement a = lc::bv_eval(lc::parse_bv_expr(parse_json_arg(outer)));
    lc::BVElement b = lc::bv_eval(lc::parse_bv_expr(parse_json_arg(inner)));
    lc::BVElement c = lc::bv_compose(a, b, slot);

    ojson params;
    params["outer"] = outer;
    params["inner"] = inner;
    params["slot"] = slot;
    ojson payload = head("bv compose", params);
    payload["outer_element"] = lc::bv_element_json(a);
    payload["inner_element"] = lc::bv_element_json(b);
    payload["result"] = lc::bv_element_json(c);
    payload["verdict"] = "pass";

    std::ostringstream tb;
    tb << "substitute the inner element into slot " << slot << "\n";
    element_lines(tb, c);
    verdict_line(tb, true);

    r.doc = lc::envelope("bv-compose", std::move(payload));
    r.table = tb.str();
    return r;
}

Report cmd_bv_relations(int max_arity) {
    Report r;
    lc::AxiomReport rep = lc::check_bv_relations(max_arity);

    ojson params;
    params["max_arity"] = max_arity;
    ojson payload = head("bv relations", params);
    payload["report"] = lc::axiom_report_json(rep);
    payload["verdict"] = rep.ok() ? "pass" : "fail";

    std::ostringstream tb;
    tb << "relation sweep up to total arity " << max_arity << "\n";
    tb << "cases: " << rep.cases << "\n";
    for (const auto& f : rep.failures) tb << "  failure: " << f << "\n";
    verdict_line(tb, rep.ok());

    r.doc = lc::envelope("bv-relations", std::move(payload));
    r.table = tb.str();
    r.exit_code = rep.ok() ? 0 : 1;
    return r;
}

// ------------------------------------------------------------------- formality

Report cmd_formality(int n) {
    Report r;
    lc::FormalModel model = lc::assemble_formal_model(n);
    const bool has_push = n >= 2; // the pushout row needs at least two marks
    lc::PushoutReport push;
    if (has_push) push = lc::ld_pushout(n);
    const bool ok = model.matches && model.zero_differential && (!has_push || push.exact);

    ojson params;
    params["n"] = n;
    ojson payload = head("formality", params);
    payload["model"] = lc::formal_model_json(model);
    if (has_push) payload["pushout"] = lc::pushout_json(push);
    payload["verdict"] = ok ? "pass" : "fail";

    std::ostringstream tb;
    tb << "formal model, arity " << n << "\n";
    tb << "dims:          " << count_list(model.dims) << "\n";
    tb << "expected:      " << count_list(model.expected) << "\n";
    tb << "lie dims:      " << count_list(model.lie_dims) << "\n";
    tb << "lie expected:  " << count_list(model.lie_expected) << "\n";
    tb << "zero differential: " << (model.zero_differential ? "yes" : "NO") << "\n";
    tb << "certificate: " << model.certificate_level << "\n";
    if (has_push) {
        poly_line(tb, "pushout row", push.ld);
        poly_line(tb, "from framed", push.from_framed);
        poly_line(tb, "from open", push.from_open);
        tb << "pushout exact: " << (push.exact ? "yes" : "NO") << "\n";
    } else {
        tb << "pushout: skipped below two marks\n";
    }
    verdict_line(tb, ok);

    r.doc = lc::envelope("formality", std::move(payload));
    r.table = tb.str();
    r.exit_code = ok ? 0 : 1;
    return r;
}

// ------------------------------------------------------------------ verify-all

Report cmd_verify(int max_n, const std::string& format) {
    Report r;
    std::ostringstream tb;
    ojson criteria = ojson::array();

    auto on_result = [&](const lc::CriterionResult& res) {
        std::ostringstream line;
        line << (res.pass ? "[PASS] " : "[FAIL] ") << res.index << " " << std::left << std::setw(20) << res.name;
        if (!res.detail.empty()) line << " " << res.detail;
        line << "\n";
        tb << line.str();
        if (format == "json")
            std::cerr << line.str();
        else
            std::cout << line.str() << std::flush;
        std::cerr << "  (criterion " << res.index << ": " << std::fixed << std::setprecision(2) << res.seconds
                  << "s)\n";
        ojson c;
        c["index"] = res.index;
        c["name"] = res.name;
        c["pass"] = res.pass;
        c["detail"] = res.detail;
        criteria.push_back(std::move(c));
    };

    lc::VerifySummary summary = lc::run_verification(max_n, on_result);
    const bool ok = summary.all_pass();
    tb << (ok ? "all criteria pass\n" : "some criteria FAIL\n");
    if (format != "json") std::cout << (ok ? "all criteria pass\n" : "some criteria FAIL\n") << std::flush;

    ojson params;
    params["max_n"] = max_n;
    ojson payload = head("verify-all", params);
    payload["criteria"] = std::move(criteria);
    payload["all_pass"] = ok;

    r.doc = lc::envelope("verify", std::move(payload));
    r.table = tb.str();
    r.exit_code = ok ? 0 : 1;
    r.streamed = format != "json";
    return r;
}

int emit(const Report& r, const std::string& format, const std::string& out_path) {
    const std::string text = format == "json" ? r.doc.dump(2) + "\n" : r.table;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return 2;
        }
        f << text;
    }
    if (!r.streamed) std::cout << text;
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of stable curves, their log structures, and the framed-curve operad"};
    app.fallthrough();
    std::string format = "table";
    std::string out_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--out", out_path, "also write the report to this file");
    app.require_subcommand(1);

    Report report;

    // strata
    auto* strata = app.add_subcommand("strata", "stratum census of the stable spaces");
    int strata_n = 4, strata_codim = -1;
    bool strata_trees = false;
    strata->add_option("--n", strata_n, "arity")->required()->check(CLI::Range(2, 8));
    strata->add_option("--codim", strata_codim, "restrict to one codimension")->check(CLI::Range(0, 6));
    strata->add_flag("--trees", strata_trees, "list the strata themselves");
    strata->callback([&] { report = cmd_strata(strata_n, strata_codim, strata_trees); });

    // flc
    auto* flc = app.add_subcommand("flc", "framed-curve spaces and their composition maps");
    flc->require_subcommand(1);
    auto* flc_space = flc->add_subcommand("space", "descriptor of one space");
    int fs_n = 2;
    flc_space->add_option("--n", fs_n, "arity")->required()->check(CLI::Range(1, 8));
    flc_space->callback([&] { report = cmd_flc_space(fs_n); });

    auto* flc_compose = flc->add_subcommand("compose", "operadic composition map");
    int fc_outer = 2, fc_inner = 2, fc_slot = 1;
    flc_compose->add_option("--outer", fc_outer, "outer arity")->required()->check(CLI::Range(1, 6));
    flc_compose->add_option("--inner", fc_inner, "inner arity")->required()->check(CLI::Range(1, 6));
    flc_compose->add_option("--slot", fc_slot, "slot in the outer space")->required()->check(CLI::Range(1, 6));
    flc_compose->callback([&] {
        if (fc_slot > fc_outer) throw std::invalid_argument("slot exceeds the outer arity");
        report = cmd_flc_compose(fc_outer, fc_inner, fc_slot);
    });

    auto* flc_theta = flc->add_subcommand("theta", "residue weight map to the log point");
    int ft_n = 2, ft_mark = 1;
    std::string ft_stratum;
    flc_theta->add_option("--n", ft_n, "arity")->required()->check(CLI::Range(1, 6));
    flc_theta->add_option("--mark", ft_mark, "mark index")->required()->check(CLI::Range(1, 6));
    flc_theta->add_option("--stratum", ft_stratum, "stratum key (open stratum when omitted)");
    flc_theta->callback([&] {
        if (ft_mark > ft_n) throw std::invalid_argument("mark exceeds the arity");
        report = cmd_flc_theta(ft_n, ft_mark, ft_stratum);
    });

    auto* flc_axioms = flc->add_subcommand("axioms", "composition axiom sweep");
    int fa_max = 3;
    flc_axioms->add_option("--max-arity", fa_max, "largest arity in the sweep")->check(CLI::Range(1, 4));
    flc_axioms->callback([&] { report = cmd_flc_axioms(fa_max); });

    // betti
    auto* betti = app.add_subcommand("betti", "Betti and Poincare rows");
    std::string b_space = "mbar";
    int b_n = 5;
    betti->add_option("--space", b_space, "row to print")
        ->required()
        ->check(CLI::IsMember({"open", "mbar", "ld", "fld", "flc-top", "tables"}));
    betti->add_option("--n", b_n, "mark count for open/mbar, arity otherwise")->required()->check(CLI::Range(1, 11));
    betti->callback([&] {
        if ((b_space == "open" || b_space == "mbar") && b_n > 8)
            throw std::invalid_argument("point-count rows are kept to n <= 8");
        if ((b_space == "flc-top" || b_space == "tables") && b_n > 7)
            throw std::invalid_argument("the top-weight row is kept to n <= 7");
        report = cmd_betti(b_space, b_n);
    });

    // purity
    auto* purity = app.add_subcommand("purity", "weight table and purity verdicts");
    int p_n = 4;
    purity->add_option("--n", p_n, "mark count")->required()->check(CLI::Range(4, 8));
    purity->callback([&] { report = cmd_purity(p_n); });

    // acyclic
    auto* acyclic = app.add_subcommand("acyclic", "acyclicity certificates");
    std::string a_family = "p1";
    int a_n = 1;
    acyclic->add_option("--family", a_family, "p1 (marked line) or flc")
        ->required()
        ->check(CLI::IsMember({"p1", "flc"}));
    acyclic->add_option("--n", a_n, "points on the line, or arity")->required();
    acyclic->callback([&] { report = cmd_acyclic(a_family, a_n); });

    // bv
    auto* bv = app.add_subcommand("bv", "the graded algebra on decorated generators");
    bv->require_subcommand(1);
    auto* bv_dims = bv->add_subcommand("dims", "multilinear dimensions by degree");
    int bd_n = 2;
    bv_dims->add_option("--n", bd_n, "arity")->required()->check(CLI::Range(1, 7));
    bv_dims->callback([&] { report = cmd_bv_dims(bd_n); });

    auto* bv_eval = bv->add_subcommand("eval", "normal form of an expression");
    std::string be_expr;
    bv_eval->add_option("--expr", be_expr, "expression JSON, or @file")->required();
    bv_eval->callback([&] { report = cmd_bv_eval(be_expr); });

    auto* bv_compose = bv->add_subcommand("compose", "operadic substitution");
    std::string bc_outer, bc_inner;
    int bc_slot = 1;
    bv_compose->add_option("--outer", bc_outer, "outer expression JSON, or @file")->required();
    bv_compose->add_option("--inner", bc_inner, "inner expression JSON, or @file")->required();
    bv_compose->add_option("--slot", bc_slot, "slot index")->required()->check(CLI::Range(1, 9));
    bv_compose->callback([&] { report = cmd_bv_compose(bc_outer, bc_inner, bc_slot); });

    auto* bv_relations = bv->add_subcommand("relations", "relation sweep");
    int br_max = 2;
    bv_relations->add_option("--max-arity", br_max, "largest total arity")->check(CLI::Range(2, 4));
    bv_relations->callback([&] { report = cmd_bv_relations(br_max); });

    // formality
    auto* formality = app.add_subcommand("formality", "formal model and the decorated pushout");
    int f_n = 2;
    formality->add_option("--n", f_n, "arity")->required()->check(CLI::Range(1, 6));
    formality->callback([&] { report = cmd_formality(f_n); });

    // verify-all
    auto* verify = app.add_subcommand("verify-all", "run every acceptance criterion");
    int v_max = 0;
    verify->add_option("--max-n", v_max, "cap the sweep sizes (0 = full depth)")->check(CLI::Range(0, 8));
    verify->callback([&] { report = cmd_verify(v_max, format); });

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
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    return emit(report, format, out_path);
}

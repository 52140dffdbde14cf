// Command-line frontend: Picard-lattice queries, Betti diagrams of point
// files, and the full Ulrich <-> MRC pipeline.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ulrich/json_io.hpp"
#include "ulrich/ulrich.hpp"

namespace {

ulrich::DivClass parse_class(const std::string& spec) {
    std::vector<std::int64_t> vals;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        vals.push_back(std::stoll(tok));
    }
    if (vals.empty()) throw CLI::ValidationError("--class", "expected a,b1,...,bk");
    ulrich::DivClass c;
    c.a = vals.front();
    c.b.assign(vals.begin() + 1, vals.end());
    return c;
}

void check_class_rank(int d, const ulrich::DivClass& c) {
    if (c.k() != static_cast<std::size_t>(9 - d))
        throw CLI::ValidationError("--class", "expected 1+" + std::to_string(9 - d) +
                                                  " entries for d=" + std::to_string(d));
}

std::string render_mrc_summary(const ulrich::MrcReport& r) {
    std::ostringstream os;
    os << "class " << r.cls.str() << " on X_" << r.d << " (p=" << r.prime << ", seed=" << r.seed
       << ")\n";
    os << "degree " << r.curve_degree << ", genus " << r.genus;
    if (r.rank)
        os << ", rank " << *r.rank << "\n";
    else
        os << ", no rank r with degree = " << r.d << "r exists\n";
    if (r.ulrich) {
        os << "ulrich numeric: " << (r.ulrich->overall ? "pass" : "fail") << " (deg "
           << (r.ulrich->deg_ok ? "ok" : "FAIL") << ", parity " << (r.ulrich->parity_ok ? "ok" : "FAIL")
           << ", bounds " << (r.ulrich->lower_bound_ok && r.ulrich->upper_bound_ok ? "ok" : "FAIL")
           << ", nef " << (r.ulrich->nef_ok ? "ok" : "FAIL") << "), c2 = " << r.ulrich->c2.str()
           << "\n";
    }
    if (r.semigroup_known) {
        os << "semigroup: " << (r.semigroup_is_member ? "member" : "not a member");
        if (r.semigroup_decomposition) {
            os << " =";
            for (const auto& t : r.semigroup_decomposition->terms)
                os << " " << t.count << "x" << t.gen.cls.str();
            os << " (total rank " << r.semigroup_decomposition->total_rank << ")";
        }
        os << "\n";
    }
    os << "P_C(t) = " << r.pc_slope << "t + " << r.pc_intercept << ", reg(I_C) = " << r.reg_curve
       << ", gamma = " << r.gamma << "\n";
    os << "curve Betti diagram:\n" << r.curve_diagram.text();
    os << "point Betti diagram (" << r.gamma << " general points):\n" << r.point_diagram.text();
    os << "MRC " << (r.mrc.holds ? "holds" : "fails");
    if (!r.mrc.holds) {
        os << ":";
        for (const auto& v : r.mrc.violations)
            os << " b_{" << v.i + 1 << "," << v.q - 1 << "}=" << v.b_upper << " * b_{" << v.i << ","
               << v.q << "}=" << v.b_lower << " != 0";
    }
    os << "\n";
    if (r.consistency.semigroup_mrc_agreement)
        os << "semigroup/MRC agreement: " << (*r.consistency.semigroup_mrc_agreement ? "yes" : "NO")
           << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ulrich-lab: Ulrich bundle numerics and MRC experiments on del Pezzo surfaces"};
    app.require_subcommand(1);

    // classes
    auto* sc_classes = app.add_subcommand("classes", "enumerate divisor classes by degree and self-intersection");
    int cl_d = 3;
    std::int64_t cl_deg = 0, cl_selfint = 0;
    sc_classes->add_option("--d", cl_d, "surface degree (3..9)")->required();
    sc_classes->add_option("--deg", cl_deg, "class degree D.H")->required();
    sc_classes->add_option("--selfint", cl_selfint, "self-intersection D^2")->required();

    // ulrich
    auto* sc_ulrich = app.add_subcommand("ulrich", "numeric Ulrich first-Chern-class criteria");
    int ul_d = 3;
    std::string ul_class;
    std::int64_t ul_rank = 1;
    sc_ulrich->add_option("--d", ul_d, "surface degree (3..9)")->required();
    sc_ulrich->add_option("--class", ul_class, "divisor class a,b1,...,bk")->required();
    sc_ulrich->add_option("--rank", ul_rank, "bundle rank")->required();

    // semigroup
    auto* sc_semi = app.add_subcommand("semigroup", "Ulrich semigroup membership (built-in generators for d=3,9)");
    int sg_d = 3;
    std::string sg_class;
    sc_semi->add_option("--d", sg_d, "surface degree (3 or 9)")->required();
    sc_semi->add_option("--class", sg_class, "divisor class a,b1,...,bk")->required();

    // betti
    auto* sc_betti = app.add_subcommand("betti", "Betti diagram of a point set file");
    std::string bt_file;
    int bt_max_row = -1;
    std::uint64_t bt_prime = 32003;
    bool bt_json = false;
    sc_betti->add_option("--points", bt_file, "point file: one point per line, n+1 integers")
        ->required();
    sc_betti->add_option("--max-row", bt_max_row, "compute rows 0..q (default: until stable)");
    sc_betti->add_option("--prime", bt_prime, "field characteristic")->envname("ULRICH_LAB_PRIME");
    sc_betti->add_flag("--json", bt_json, "emit JSON instead of the text array");

    // mrc
    auto* sc_mrc = app.add_subcommand("mrc", "full Ulrich <-> MRC pipeline for a class on X_d");
    int mr_d = 3;
    std::string mr_class, mr_out;
    ulrich::RunConfig cfg;
    std::int64_t mr_gamma = -1;
    bool mr_json = false;
    sc_mrc->add_option("--d", mr_d, "surface degree (3..7 have plane models)")->required();
    sc_mrc->add_option("--class", mr_class, "divisor class a,b1,...,bk")->required();
    sc_mrc->add_option("--prime", cfg.prime, "field characteristic")->envname("ULRICH_LAB_PRIME");
    sc_mrc->add_option("--seed", cfg.seed, "master seed")->envname("ULRICH_LAB_SEED");
    sc_mrc->add_option("--gamma", mr_gamma, "number of general points (default: max(g, P_C(reg)) + 2)");
    sc_mrc->add_flag("--json", mr_json, "emit the full JSON report on stdout");
    sc_mrc->add_option("--out", mr_out, "also write the JSON report to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sc_classes) {
            ulrich::DelPezzo X(cl_d);
            nlohmann::json j = ulrich::enumerate_classes(X, cl_deg, cl_selfint);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*sc_ulrich) {
            ulrich::DelPezzo X(ul_d);
            const auto cls = parse_class(ul_class);
            check_class_rank(ul_d, cls);
            nlohmann::json j = ulrich::ulrich_numeric_check(X, cls, ul_rank);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*sc_semi) {
            ulrich::DelPezzo X(sg_d);
            const auto cls = parse_class(sg_class);
            check_class_rank(sg_d, cls);
            const auto dec = ulrich::semigroup_member(X, cls, ulrich::semigroup_generators(X));
            nlohmann::json j;
            j["member"] = dec.has_value();
            if (dec) j["decomposition"] = *dec;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*sc_betti) {
            const ulrich::PrimeField f(bt_prime);
            std::ifstream in(bt_file);
            if (!in) throw std::runtime_error("cannot open point file: " + bt_file);
            const auto pts = ulrich::ProjPointSet::parse(f, in);
            ulrich::BettiDiagram dg;
            if (bt_max_row >= 0) {
                const auto I = ulrich::GradedIdealTruncation::from_points(pts, bt_max_row + 1);
                dg = ulrich::betti_diagram(I, bt_max_row);
            } else {
                dg = ulrich::stable_diagram_of_points(pts).diagram;
            }
            if (bt_json)
                std::cout << nlohmann::json(dg).dump(2) << "\n";
            else
                std::cout << dg.text();
            return 0;
        }
        if (*sc_mrc) {
            const auto cls = parse_class(mr_class);
            check_class_rank(mr_d, cls);
            if (mr_gamma >= 0) cfg.gamma_override = mr_gamma;
            const auto rep = ulrich::mrc_pipeline(mr_d, cls, cfg);
            const nlohmann::json j = ulrich::report_serialize(rep);
            if (!mr_out.empty()) {
                std::ofstream out(mr_out);
                if (!out) throw std::runtime_error("cannot write report to " + mr_out);
                out << j.dump(2) << "\n";
            }
            if (mr_json)
                std::cout << j.dump(2) << "\n";
            else
                std::cout << render_mrc_summary(rep);
            return rep.mrc.holds ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

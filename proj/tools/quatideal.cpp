// Command-line front end for the quaternion ideal library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "quatideal/experiments.hpp"

using namespace quatideal;
using nlohmann::json;

namespace {

std::array<Int, 3> parse_triple(const std::string& s) {
    std::array<Int, 3> out;
    std::stringstream ss(s);
    std::string part;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, part, ',')) throw CLI::ValidationError("expected x,y,z");
        out[i] = Int(part);
    }
    return out;
}

std::pair<Int, Int> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("expected a,b");
    return {Int(s.substr(0, comma)), Int(s.substr(comma + 1))};
}

ZBasis make_seed(const std::string& mu_s, const std::string& ideal_s) {
    auto [x, y, z] = parse_triple(mu_s);
    QuadraticOrder o = make_order(x, y, z);
    auto [a, b] = parse_pair(ideal_s);
    ZBasis zb;
    zb.a = a;
    zb.b = b % a;
    if (zb.b < 0) zb.b += a;
    zb.order = o;
    return zb;
}

json quaternion_json(const HurwitzQuaternion& q) { return json::parse(q.json()); }

json ideal_json(const Ideal& ideal) {
    json j;
    j["rho"] = quaternion_json(ideal.rho());
    j["rho_text"] = ideal.rho().str();
    j["content"] = ideal.content().get_str();
    j["norm"] = ideal.norm().get_str();
    ZBasis z = restore_z_basis(ideal.primitive_part());
    j["a"] = z.a.get_str();
    j["b"] = z.b.get_str();
    return j;
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact arithmetic for ideals of imaginary quadratic orders in the Hurwitz quaternions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    auto* cmd_ts = app.add_subcommand("three-squares", "decompose m into three squares");
    std::string ts_m;
    bool ts_all = false;
    cmd_ts->add_option("m", ts_m)->required();
    cmd_ts->add_flag("--all", ts_all, "list all representations");

    auto* cmd_mo = app.add_subcommand("make-order", "build the quadratic order O(xi+yj+zk)");
    std::string mo_mu;
    cmd_mo->add_option("mu", mo_mu, "x,y,z")->required();

    auto* cmd_ideal = app.add_subcommand("ideal", "pseudo-generator ideal operations");
    std::string id_op, id_m, id_mu, id_ideal, id_ideal2;
    cmd_ideal->add_option("op", id_op, "restore|reduce|conj|mul|check|left-right")->required();
    cmd_ideal->add_option("--m", id_m);
    cmd_ideal->add_option("--mu", id_mu, "x,y,z")->required();
    cmd_ideal->add_option("--ideal", id_ideal, "a,b")->required();
    cmd_ideal->add_option("--ideal2", id_ideal2, "a,b (second operand for mul)");

    auto* cmd_sm = app.add_subcommand("solve-module", "lattice of solutions of rho mu = mu' rho");
    std::string sm_m, sm_mu, sm_mup;
    cmd_sm->add_option("--m", sm_m);
    cmd_sm->add_option("--mu", sm_mu, "x,y,z")->required();
    cmd_sm->add_option("--mu-prime", sm_mup, "x,y,z")->required();

    auto* cmd_f = app.add_subcommand("factor", "factor via quadratic orders");
    std::string f_m;
    bool f_pairs = false, f_single = false;
    cmd_f->add_option("m", f_m)->required();
    cmd_f->add_flag("--pairs", f_pairs, "search all pairs of representations");
    cmd_f->add_flag("--single-rep", f_single, "use mu2 = -mu only (default)");

    auto* cmd_cg = app.add_subcommand("class-group", "structure of Cl(discriminant)");
    std::string cg_d;
    cmd_cg->add_option("discriminant", cg_d)->required();
    auto* cmd_cn = app.add_subcommand("class-number", "h(discriminant)");
    std::string cn_d;
    cmd_cn->add_option("discriminant", cn_d)->required();

    auto* cmd_census = app.add_subcommand("census", "ambiguous-ideal census up to a limit");
    long cs_limit = 1000;
    std::string cs_json, cs_details;
    int cs_threads = 1;
    cmd_census->add_option("--limit", cs_limit)->required();
    cmd_census->add_option("--json", cs_json, "write JSON to file ('-' for stdout)");
    cmd_census->add_option("--details", cs_details, "write per-m CSV to file");
    cmd_census->add_option("--threads", cs_threads, "parallel workers (QUATIDEAL_THREADS overrides)");

    auto* cmd_cycle = app.add_subcommand("cycle", "walk the order cycle of an ideal");
    std::string cy_m, cy_mu, cy_ideal, cy_search;
    cmd_cycle->add_option("--m", cy_m);
    cmd_cycle->add_option("--mu", cy_mu, "x,y,z")->required();
    cmd_cycle->add_option("--ideal", cy_ideal, "a,b")->required();
    cmd_cycle->add_option("--order-search", cy_search, "separation|bruteforce");

    auto* cmd_oo = app.add_subcommand("order-of", "class order of an ideal");
    std::string oo_mu, oo_ideal, oo_method = "bruteforce";
    cmd_oo->add_option("--mu", oo_mu, "x,y,z")->required();
    cmd_oo->add_option("--ideal", oo_ideal, "a,b")->required();
    cmd_oo->add_option("--method", oo_method, "separation|bruteforce");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help() << "\n" << e.what() << "\n";
        return 2;
    }

    if (cmd_ts->parsed()) {
        Int m(ts_m);
        if (ts_all) {
            auto reps = all_three_squares(m);
            json j = json::array();
            std::ostringstream os;
            for (const auto& r : reps) {
                j.push_back({{"x", r.x.get_str()}, {"y", r.y.get_str()}, {"z", r.z.get_str()}});
                os << m << " = " << r.x << "^2 + " << r.y << "^2 + " << r.z << "^2\n";
            }
            std::string text = os.str();
            if (!text.empty()) text.pop_back();
            emit(j, as_json, text);
        } else {
            auto r = three_squares(m);
            json j{{"x", r.x.get_str()}, {"y", r.y.get_str()}, {"z", r.z.get_str()}};
            std::ostringstream os;
            os << m << " = " << r.x << "^2 + " << r.y << "^2 + " << r.z << "^2";
            emit(j, as_json, os.str());
        }
    } else if (cmd_mo->parsed()) {
        auto [x, y, z] = parse_triple(mo_mu);
        QuadraticOrder o = make_order(x, y, z);
        json j{{"mu", quaternion_json(o.mu)}, {"m", o.m.get_str()}, {"r", o.r},
               {"omega", quaternion_json(o.omega)}, {"sign", to_string(sign_of_order(o))}};
        emit(j, as_json, "O(" + o.mu.str() + ")  m = " + o.m.get_str() + "  r = " +
                             std::to_string(o.r) + "  omega = " + o.omega.str());
    } else if (cmd_ideal->parsed()) {
        ZBasis seed = make_seed(id_mu, id_ideal);
        Ideal I = from_z_basis(seed);
        if (id_op == "restore") {
            json j = ideal_json(I);
            emit(j, as_json, "rho = " + I.rho().str() + "   [a, b] = [" + j["a"].get<std::string>() +
                                 ", " + j["b"].get<std::string>() + "]");
        } else if (id_op == "reduce") {
            int iters = 0;
            Ideal R = reduce(I, &iters);
            json j = ideal_json(R);
            j["iterations"] = iters;
            emit(j, as_json, "reduced: rho = " + R.rho().str() + "  norm " + R.norm().get_str());
        } else if (id_op == "conj") {
            Ideal C = conjugate_ideal(I);
            json j = ideal_json(C);
            emit(j, as_json, "conjugate: rho = " + C.rho().str());
        } else if (id_op == "mul") {
            if (id_ideal2.empty()) throw CLI::ValidationError("mul needs --ideal2");
            Ideal J = from_z_basis(make_seed(id_mu, id_ideal2));
            Ideal P = multiply(I, J);
            json j = ideal_json(P.primitive_part());
            j["content"] = P.content().get_str();
            emit(j, as_json, "product: rho = " + P.rho().str() + "  content " + P.content().get_str());
        } else if (id_op == "check") {
            IdentityReport rep = check_identities(I);
            json j{{"generator_relation", rep.generator_relation},
                   {"generator_relation_xi", rep.generator_relation_xi},
                   {"trace_relation", rep.trace_relation},
                   {"norm_relation", rep.norm_relation},
                   {"all", rep.all()}};
            emit(j, as_json, std::string("identities: ") + (rep.all() ? "all hold" : "FAILURE"));
        } else if (id_op == "left-right") {
            HurwitzQuaternion lambda = left_from_right(I.rho(), I.order());
            HurwitzQuaternion back = right_from_left(lambda, I.order());
            json j{{"rho_right", quaternion_json(I.rho())}, {"rho_left", quaternion_json(lambda)},
                   {"round_trip", back == I.rho()}};
            emit(j, as_json, "left generator = " + lambda.str());
        } else {
            throw CLI::ValidationError("unknown ideal op: " + id_op);
        }
    } else if (cmd_sm->parsed()) {
        auto [x, y, z] = parse_triple(sm_mu);
        auto [xp, yp, zp] = parse_triple(sm_mup);
        SolutionModule sm = solve(HurwitzQuaternion::pure(x, y, z), HurwitzQuaternion::pure(xp, yp, zp));
        auto [A, B, C] = norm_form(sm);
        json j{{"upsilon", quaternion_json(sm.upsilon)}, {"upsilon1", quaternion_json(sm.upsilon1)},
               {"form", {A.get_str(), B.get_str(), C.get_str()}}};
        emit(j, as_json, "upsilon = " + sm.upsilon.str() + "\nupsilon1 = " + sm.upsilon1.str() +
                             "\nnorm form (" + A.get_str() + ", " + B.get_str() + ", " + C.get_str() + ")");
    } else if (cmd_f->parsed()) {
        Int m(f_m);
        json j;
        j["m"] = m.get_str();
        j["witnesses"] = json::array();
        auto report = [&](const FactorWitness& w) {
            json wj{{"factor", w.factor.get_str()}};
            if (w.mu) wj["mu"] = quaternion_json(*w.mu);
            if (w.mu2) wj["mu2"] = quaternion_json(*w.mu2);
            if (w.rho) {
                wj["rho"] = quaternion_json(*w.rho);
                wj["rho_norm"] = w.rho_norm.get_str();
            }
            if (w.representations) {
                const auto& r = *w.representations;
                wj["representations"] = {r[0].get_str(), r[1].get_str(), r[2].get_str(), r[3].get_str()};
            }
            j["witnesses"].push_back(wj);
        };
        auto reps = all_three_squares(m);
        if (f_pairs) {
            for (const auto& rep : reps) {
                if (content(HurwitzQuaternion::pure(rep.x, rep.y, rep.z)) != 1) continue;
                QuadraticOrder o = make_order(rep.x, rep.y, rep.z);
                // the four order families of every representation of m
                for (const auto& other : reps) {
                    HurwitzQuaternion candidates[4] = {
                        HurwitzQuaternion::pure(other.x, other.y, other.z),
                        HurwitzQuaternion::pure(other.x, other.z, other.y),
                        -HurwitzQuaternion::pure(other.x, other.y, other.z),
                        -HurwitzQuaternion::pure(other.x, other.z, other.y)};
                    for (const auto& t : candidates) {
                        if (t == o.mu || content(t) != 1) continue;
                        if (auto w = factor_from_order_pair(o, QuadraticOrder::from_mu(t))) report(*w);
                    }
                }
            }
        } else {
            (void)f_single;
            for (const auto& r : reps) {
                if (r.z == 0 || r.x == r.y || r.y == r.z) continue;
                QuadraticOrder o = make_order(r.x, r.y, r.z);
                if (auto w = factor_from_order_pair(o, QuadraticOrder::from_mu(-o.mu))) report(*w);
            }
        }
        std::cout << j.dump(2) << "\n";   // witness traces are always JSON
    } else if (cmd_cg->parsed()) {
        ClassGroupDescription g = class_group(Int(cg_d));
        json j{{"discriminant", g.discriminant.get_str()}, {"h", g.h.get_str()}};
        std::ostringstream os;
        os << "h = " << g.h << "   Cl =";
        j["elementary_divisors"] = json::array();
        for (const auto& d : g.elementary_divisors) {
            j["elementary_divisors"].push_back(d.get_str());
            os << " " << d;
        }
        emit(j, as_json, os.str());
    } else if (cmd_cn->parsed()) {
        Int h = class_number(Int(cn_d));
        emit(json{{"h", h.get_str()}}, as_json, "h = " + h.get_str());
    } else if (cmd_census->parsed()) {
        if (const char* env = std::getenv("QUATIDEAL_THREADS")) cs_threads = std::atoi(env);
        std::vector<CensusDetail> details;
        CensusRow row = census(cs_limit, cs_threads, &details, [](long done, long total) {
            std::cerr << "census: " << done << " / " << total << "\n";
        });
        json j{{"limit", row.limit}, {"sigma", row.count_sigma}, {"a", row.count_a},
               {"percent", row.percent}, {"argmax_m", row.argmax_m},
               {"argmax_count", row.argmax_count}, {"example_outside", row.example_outside}};
        if (row.example_in_a) {
            j["example_in_a"] = {{"m", row.example_in_a->m}, {"x", row.example_in_a->x},
                                 {"y", row.example_in_a->y}, {"z", row.example_in_a->z}};
        }
        char pct[32];
        std::snprintf(pct, sizeof pct, "%.2f", row.percent);
        std::ostringstream os;
        os << "N = " << row.limit << "  #Sigma = " << row.count_sigma << "  #A = " << row.count_a
           << "  % = " << pct << "  max = " << row.argmax_m << " (" << row.argmax_count << ")";
        if (!cs_json.empty()) {
            if (cs_json == "-") std::cout << j.dump(2) << "\n";
            else {
                std::ofstream(cs_json) << j.dump(2) << "\n";
                std::cout << os.str() << "\n";
            }
        } else {
            emit(j, as_json, os.str());
        }
        if (!cs_details.empty()) {
            std::ofstream csv(cs_details);
            csv << "m,x,y,z,ambiguous_class_count,factor_found\n";
            for (const auto& d : details)
                csv << d.m << "," << d.x << "," << d.y << "," << d.z << ","
                    << d.ambiguous_class_count << "," << d.factor_found << "\n";
        }
    } else if (cmd_cycle->parsed()) {
        ZBasis seed = make_seed(cy_mu, cy_ideal);
        Cycle c = walk_cycle(seed);
        json j{{"f", c.length()}, {"separated", is_separated(c)}};
        j["orders"] = json::array();
        std::ostringstream os;
        os << "f = " << c.length() << (is_separated(c) ? "  (separated)" : "  (not separated)") << "\n";
        for (int i = 0; i < c.length(); ++i) {
            j["orders"].push_back({{"mu", quaternion_json(c.orders[i])},
                                   {"sign", to_string(c.signs[i])}});
            os << "  mu_" << (i + 1) << " = " << c.orders[i].str() << "  [" << to_string(c.signs[i])
               << "]\n";
        }
        if (cy_search == "separation") j["order"] = order_via_separation(seed).get_str();
        else if (cy_search == "bruteforce") j["order"] = order_via_bruteforce(seed).get_str();
        if (j.contains("order")) os << "class order = " << j["order"].get<std::string>() << "\n";
        std::string text = os.str();
        text.pop_back();
        emit(j, as_json, text);
    } else if (cmd_oo->parsed()) {
        ZBasis seed = make_seed(oo_mu, oo_ideal);
        Int f = oo_method == "separation" ? order_via_separation(seed) : order_via_bruteforce(seed);
        emit(json{{"order", f.get_str()}}, as_json, "class order = " + f.get_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

#include "qtutte/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "qtutte/errors.hpp"
#include "qtutte/invariance.hpp"
#include "qtutte/io.hpp"

namespace qtutte {

using nlohmann::json;

namespace {

struct Job {
    std::string command;
    std::string input;
    std::string poly = "both";
    std::string format = "json";
    std::uint64_t seed = 0;
    std::string method = "clopen";
    bool fast = false;
    bool trusted = false;
    std::size_t max_elements = kDefaultMaxElements;
    std::string partition;
};

struct Outcome {
    json doc;
    std::string text;
    int code = kExitOk;
};

PrimeFreeMethod method_of(const Job& job) {
    return job.method == "diamond_scan" ? PrimeFreeMethod::DiamondScan : PrimeFreeMethod::Clopen;
}

QMatroid load(const Job& job, bool trusted) {
    return qmatroid_from_json(read_json_file(job.input), {trusted, job.max_elements});
}

Outcome cmd_compute(const Job& job) {
    QMatroid m = load(job, job.trusted);
    Outcome o;
    if (job.poly == "rank" || job.poly == "both") {
        auto rho = rank_polynomial(m);
        o.doc["rank"] = poly_to_json(rho);
        o.text += "rank: " + rho.to_string() + "\n";
    }
    if (job.poly == "tutte" || job.poly == "both") {
        auto tau = tutte_polynomial(m);
        o.doc["tutte"] = poly_to_json(tau);
        o.text += "tutte: " + tau.to_string() + "\n";
        if (!job.fast) {
            auto p = tutte_partition(m, job.seed);
            auto via = tutte_from_partition(m, p);
            bool agree = via == tau;
            o.doc["cross_check"] = {{"seed", job.seed},
                                    {"partition_size", p.size()},
                                    {"tutte_from_partition", via.to_string()},
                                    {"agree", agree}};
            o.text += "cross-check: " + std::string(agree ? "agree" : "MISMATCH " + via.to_string()) + "\n";
            if (!agree) o.code = kExitMismatch;
        }
    }
    return o;
}

Outcome cmd_partition(const Job& job) {
    QMatroid m = load(job, job.trusted);
    const auto& lat = m.lattice();
    auto p = tutte_partition(m, job.seed);
    Outcome o;
    o.doc = partition_to_json(lat, p);
    o.doc["seed"] = job.seed;
    for (const auto& part : p.parts)
        o.text += "[" + lat.representative(part.interval.bottom) + ", " + lat.representative(part.interval.top) +
                  "] rank " + std::to_string(part.rank) + " nullity " + std::to_string(part.nullity) + "\n";
    o.text += std::to_string(p.size()) + " parts\n";
    if (!job.fast) {
        auto v = verify_tutte_partition(m, p);
        if (!v.ok) {
            o.doc["verification"] = v.message;
            o.text += "verification failed: " + v.message + "\n";
            o.code = kExitMismatch;
        }
    }
    return o;
}

json interval_json(const SupportLattice& lat, const Interval& iv) {
    return json::array({lat.representative(iv.bottom), lat.representative(iv.top)});
}

Outcome cmd_check(const Job& job) {
    // load unverified so an axiom failure becomes a report with its witness
    QMatroid m = load(job, true);
    const auto& lat = m.lattice();
    std::vector<AxiomReport> reports;
    json findings = json::object();

    AxiomReport axioms{"rank-axioms", true, json::object()};
    if (!job.trusted) {
        try {
            m.verify();
        } catch (const AxiomError& e) {
            axioms.pass = false;
            axioms.witness["violation"] = e.what();
        }
    }
    reports.push_back(axioms);

    if (axioms.pass) {
        const auto w = m.weighting();
        QMatroid back = QMatroid::from_weighting(lat, w, false);
        reports.push_back({"cryptomorphism",
                           back.ranks() == m.ranks() && back.weighting() == w,
                           {{"covers", w.size()}, {"elements", lat.size()}}});

        const auto z = totally_clopen(m);
        const auto d = find_prime_diamond(m);
        const bool pf = is_prime_free(m, method_of(job));
        reports.push_back({"prime-free-equivalence",
                           z.has_value() == !d.has_value(),
                           {{"method", job.method},
                            {"prime_free", pf},
                            {"totally_clopen", z ? json(lat.representative(*z)) : json(nullptr)},
                            {"prime_diamond", d ? interval_json(lat, *d) : json(nullptr)}}});
        findings["prime_free"] = pf;

        IntervalPartition p;
        AxiomReport part{"tutte-partition", false, json::object()};
        if (!job.partition.empty()) {
            auto ivs = intervals_from_json(lat, read_json_file(job.partition));
            part.witness["source"] = "file";
            auto base = verify_partition(lat, ivs);
            if (base.ok) p = make_partition(m, ivs);
            else part.witness["violation"] = base.message;
        } else {
            p = tutte_partition(m, job.seed);
            part.witness["source"] = "constructed";
            part.witness["seed"] = job.seed;
        }
        if (!p.parts.empty()) {
            auto v = verify_tutte_partition(m, p);
            part.witness["size"] = p.size();
            if (!v.ok) {
                part.witness["clause"] = v.clause;
                part.witness["violation"] = v.message;
            } else {
                auto tau = tutte_polynomial(m);
                auto via = tutte_from_partition(m, p);
                part.witness["tutte"] = tau.to_string();
                part.witness["tutte_from_partition"] = via.to_string();
                part.pass = via == tau;
            }
        }
        reports.push_back(part);

        if (lat.is_full()) {
            reports.push_back(check_qp1(m, job.seed));
            if (z) {
                AxiomReport qp2{"q-P2", true, json::object()};
                json atoms = json::array();
                for (Index e : lat.atoms()) {
                    auto r = check_qp2(m, e);
                    if (!r.pass && qp2.pass) qp2.witness = r.witness;
                    qp2.pass = qp2.pass && r.pass;
                }
                if (qp2.pass) qp2.witness["atoms"] = lat.atoms().size();
                reports.push_back(qp2);
            } else {
                reports.push_back(check_qp3(m, job.seed));
                auto sp = select_splitting_pair(m);
                reports.push_back(check_rank_split(m, sp.e, sp.c, job.seed));
            }
            reports.push_back(check_duality(m));
            if (lat.kind() == LatticeKind::Boolean) {
                reports.push_back(check_matroid_tg(m));
                if (part.pass) {
                    auto co = crapo_orderability(m, p);
                    json c = {{"orderable", co.orderable}};
                    std::vector<std::string> reps;
                    for (Index b : co.orderable ? co.order : co.cycle) reps.push_back(lat.representative(b));
                    c[co.orderable ? "order" : "cycle"] = reps;
                    if (!co.orderable) {
                        json all = json::array();
                        for (const auto& cyc : co.cycles) {
                            std::vector<std::string> r;
                            for (Index b : cyc) r.push_back(lat.representative(b));
                            all.push_back(r);
                        }
                        c["shortest_cycles"] = all;
                    }
                    findings["crapo_orderability"] = c;
                }
            }
        }
    }

    Outcome o;
    bool all = true;
    json list = json::array();
    for (const auto& r : reports) {
        list.push_back(to_json(r));
        if (!r.applicable) {
            o.text += r.axiom + ": not applicable\n  " + r.witness.dump() + "\n";
            continue;
        }
        all = all && r.pass;
        o.text += r.axiom + ": " + (r.pass ? "pass" : "FAIL") + "\n";
        if (!r.pass) o.text += "  " + r.witness.dump() + "\n";
    }
    if (findings.contains("prime_free"))
        o.text += std::string("prime-free: ") + (findings["prime_free"].get<bool>() ? "true" : "false") + "\n";
    if (findings.contains("crapo_orderability")) {
        const auto& c = findings["crapo_orderability"];
        std::string s;
        for (const auto& b : c[c["orderable"].get<bool>() ? "order" : "cycle"]) s += (s.empty() ? "" : ", ") + b.get<std::string>();
        o.text += std::string("crapo-orderability: ") + (c["orderable"].get<bool>() ? "order {" : "cycle {") + s + "}\n";
    }
    o.doc = {{"reports", list}, {"findings", findings}, {"pass", all}};
    o.code = all ? kExitOk : kExitAxiom;
    return o;
}

Outcome cmd_dual(const Job& job) {
    QMatroid d = load(job, job.trusted).dual();
    Outcome o;
    o.doc = qmatroid_to_json(d);
    for (const auto& e : o.doc["rank"]["entries"])
        o.text += e[0].get<std::string>() + " " + std::to_string(e[1].get<int>()) + "\n";
    return o;
}

Outcome cmd_bases(const Job& job) {
    QMatroid m = load(job, job.trusted);
    const auto& lat = m.lattice();
    auto bases = m.bases();
    BigInt by_rank = count_bases(m, BaseCountMethod::RankPoly);
    BigInt by_trace = count_bases(m, BaseCountMethod::Trace);
    Outcome o;
    std::vector<std::string> reps;
    for (Index b : bases) reps.push_back(lat.representative(b));
    o.doc = {{"count", bases.size()},
             {"rank_at_0_0", by_rank.str()},
             {"trace_pairing", by_trace.str()},
             {"bases", reps}};
    o.text = "bases: " + std::to_string(bases.size()) + "\nrank(0,0): " + by_rank.str() +
             "\n<tutte,Q>: " + by_trace.str() + "\n";
    if (by_rank != BigInt(bases.size()) || by_trace != BigInt(bases.size())) o.code = kExitMismatch;
    return o;
}

Outcome cmd_lattice(const Job& job) {
    QMatroid m = load(job, job.trusted);
    const auto& lat = m.lattice();
    Outcome o;
    std::vector<std::string> reps;
    for (Index x = 0; x < lat.size(); ++x) reps.push_back(lat.representative(x));
    o.doc = {{"kind", lat.kind() == LatticeKind::Boolean ? "boolean" : "subspace"},
             {"q", lat.q()},
             {"n", lat.ambient_dim()},
             {"size", lat.size()},
             {"covers", lat.covers().size()},
             {"diamonds", lat.diamonds().size()},
             {"elements", reps}};
    o.text = "size " + std::to_string(lat.size()) + "\ncovers " + std::to_string(lat.covers().size()) +
             "\ndiamonds " + std::to_string(lat.diamonds().size()) + "\n";
    auto w = m.weighting();
    if (job.format == "dot") o.text = lat.to_dot(&w);
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-matroid Tutte and rank polynomials", "qtutte"};
    app.require_subcommand(1);
    Job job;
    app.add_option("--input", job.input, "q-matroid JSON file");
    app.add_option("--poly", job.poly, "polynomials to compute")->check(CLI::IsMember({"rank", "tutte", "both"}));
    app.add_option("--format", job.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_option("--seed", job.seed, "seed for matching order");
    app.add_option("--method", job.method, "prime-freeness test")
        ->check(CLI::IsMember({"clopen", "diamond_scan"}));
    app.add_flag("--fast", job.fast, "skip cross-checks");
    app.add_flag("--trusted", job.trusted, "skip the rank axiom scan");
    app.add_option("--max-elements", job.max_elements, "lattice size cap");
    app.add_option("--partition", job.partition, "partition JSON for check");
    for (const char* name : {"compute", "partition", "check", "dual", "bases", "lattice"})
        app.add_subcommand(name)->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }
    job.command = app.get_subcommands().front()->get_name();
    if (job.input.empty()) {
        err << "error: --input is required\n";
        return kExitParse;
    }
    if (job.format == "dot" && job.command != "lattice") {
        err << "error: dot output is available for the lattice command only\n";
        return kExitParse;
    }

    try {
        Outcome o;
        if (job.command == "compute") o = cmd_compute(job);
        else if (job.command == "partition") o = cmd_partition(job);
        else if (job.command == "check") o = cmd_check(job);
        else if (job.command == "dual") o = cmd_dual(job);
        else if (job.command == "bases") o = cmd_bases(job);
        else o = cmd_lattice(job);
        if (job.format == "json") out << o.doc.dump(2) << "\n";
        else out << o.text;
        return o.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const FieldError& e) {
        err << "field error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DimensionError& e) {
        err << "dimension error: " << e.what() << "\n";
        return kExitParse;
    } catch (const AxiomError& e) {
        err << "axiom violation: " << e.what() << "\n";
        return kExitAxiom;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitOther;
    }
}

}  // namespace qtutte

#include "bvh/report.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

using nlohmann::json;

namespace bvh {

namespace {

json vecToJson(const FpVec& v) {
    json a = json::array();
    for (auto x : v) a.push_back(static_cast<int>(x));
    return a;
}

json matrixToJson(const DeltaMatrix& M) {
    // row-major for readability
    json rows = json::array();
    for (int r = 0; r < M.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < M.cols(); ++c)
            row.push_back(static_cast<int>(M.columns[c][r]));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<int> centralElements(const Group& G, bool nontrivialOnly) {
    std::vector<int> out;
    for (int z : center(G).elements)
        if (!nontrivialOnly || z != G.identity()) out.push_back(z);
    return out;
}

json checkEntry(const std::string& name, bool pass, const std::string& detail,
                bool& ok) {
    if (!pass) ok = false;
    json e{{"name", name}, {"pass", pass}};
    if (!detail.empty()) e["detail"] = detail;
    return e;
}

// ---- commands ----------------------------------------------------------

json cmdInfo(const RunConfig& cfg, const Group& G, bool& ok) {
    (void)ok;
    json j;
    j["order"] = G.order();
    j["isPGroup"] = G.isPGroup(cfg.p);
    Subgroup Z = center(G);
    j["centreOrder"] = Z.order();
    j["derivedOrder"] = derivedSubgroup(G).order();
    if (G.isPGroup(cfg.p)) {
        Subgroup Phi = frattiniSubgroup(G);
        j["frattiniOrder"] = Phi.order();
        j["centreModCentreMeetFrattini"] =
            Z.order() / intersect(Z, Phi).order();
    }
    ConjugacyData conj = conjugacyClasses(G);
    j["conjugacyClassCount"] = static_cast<int>(conj.representatives.size());
    json reps = json::array();
    for (int r : conj.representatives) reps.push_back(G.label(r));
    j["classRepresentatives"] = std::move(reps);
    j["homDimension"] = static_cast<int>(h1Homs(G, cfg.p).size());
    return j;
}

json cmdCohomology(const RunConfig& cfg, const Group& G,
                   CohomologyContext& coh, bool& ok) {
    (void)ok;
    json dims = json::array();
    for (int n = 0; n <= cfg.maxDegree; ++n)
        dims.push_back(coh.space(G, cfg.p, n)->dim());
    return json{{"dims", std::move(dims)}, {"maxDegree", cfg.maxDegree}};
}

json cmdDelta(const RunConfig& cfg, const Group& G, CohomologyContext& coh,
              bool& ok) {
    std::vector<int> elems;
    if (!cfg.element.empty())
        elems.push_back(resolveElement(G, cfg.p, cfg.element));
    else
        elems = centralElements(G, true);
    json out;
    json checks = json::array();
    json perElement = json::array();
    for (int g : elems) {
        json ej{{"element", G.label(g)}};
        std::vector<DeltaMatrix> mats;
        json degs = json::array();
        for (int n = 1; n <= cfg.maxDegree; ++n) {
            DeltaMatrix M = deltaMatrix(coh, G, cfg.p, g, n);
            degs.push_back(json{{"degree", n},
                                {"rows", M.rows()},
                                {"cols", M.cols()},
                                {"rank", M.rank()},
                                {"matrix", matrixToJson(M)}});
            mats.push_back(std::move(M));
        }
        ej["matrices"] = std::move(degs);
        perElement.push_back(std::move(ej));
        for (size_t n = 1; n < mats.size(); ++n) {
            bool zero = true;
            for (const FpVec& col : mats[n].columns)
                for (auto x : mats[n - 1].apply(col))
                    if (x != 0) zero = false;
            checks.push_back(checkEntry(
                "delta-squared " + G.label(g) + " degree " +
                    std::to_string(n + 1),
                zero, "", ok));
        }
    }
    out["elements"] = std::move(perElement);
    out["checks"] = std::move(checks);
    return out;
}

json witnessToJson(const NonsolubleWitness& w) {
    json j;
    switch (w.kind) {
        case NonsolubleWitness::Kind::Sl2Triple:
            j["kind"] = "sl2-triple";
            j["e"] = vecToJson(w.e);
            j["f"] = vecToJson(w.f);
            j["h"] = vecToJson(w.h);
            break;
        case NonsolubleWitness::Kind::SelfReproducing: {
            j["kind"] = "self-reproducing-subspace";
            json span = json::array();
            for (const FpVec& v : w.spanning) span.push_back(vecToJson(v));
            j["spanning"] = std::move(span);
            break;
        }
        case NonsolubleWitness::Kind::HypothesisNotMet:
            j["kind"] = "hypothesis-not-met";
            break;
    }
    j["verified"] = w.verified;
    j["detail"] = w.detail;
    return j;
}

json cmdHH1Lie(const RunConfig& cfg, const Group& G, CohomologyContext& coh,
               bool& ok) {
    HHContext ctx(G, cfg.p, coh);
    HH1Lie L = buildHH1Lie(ctx);
    json j;
    j["dim"] = L.algebra.dim;
    j["labels"] = L.algebra.labels;
    json constants = json::array();
    for (int i = 0; i < L.algebra.dim; ++i)
        for (int k = 0; k < L.algebra.dim; ++k)
            for (int m = 0; m < L.algebra.dim; ++m)
                if (L.algebra.c[i][k][m])
                    constants.push_back(json{
                        {"i", i}, {"j", k}, {"k", m},
                        {"v", static_cast<int>(L.algebra.c[i][k][m])}});
    j["structureConstants"] = std::move(constants);

    json checks = json::array();
    LieAxiomReport axioms = verifyLieAxioms(L.algebra);
    checks.push_back(checkEntry("lie-axioms", axioms.pass, axioms.violation, ok));
    if (!axioms.pass) {
        j["checks"] = std::move(checks);
        return j;
    }
    DerivedSeriesAnalysis a = derivedSeriesAnalysis(L.algebra);
    j["derivedSeriesDims"] = a.derivedSeriesDims;
    j["lowerCentralDims"] = a.lowerCentralDims;
    j["soluble"] = a.soluble;
    j["derivedLength"] = a.derivedLength;
    j["nilpotent"] = a.nilpotent;

    NonsolubleWitness w = constructNonsolubleWitness(L);
    j["nonsolubleWitness"] = witnessToJson(w);
    if (w.kind != NonsolubleWitness::Kind::HypothesisNotMet)
        checks.push_back(checkEntry(
            "nonsoluble-witness", w.verified && !a.soluble, w.detail, ok));
    if (G.isPGroup(cfg.p) && G.order() > 1) {
        NonNilpotencyWitness nw = constructNonNilpotencyWitness(L);
        j["nonNilpotencyWitness"] =
            json{{"x", vecToJson(nw.x)}, {"y", vecToJson(nw.y)},
                 {"verified", nw.verified}};
        checks.push_back(
            checkEntry("non-nilpotency-witness", nw.verified && !a.nilpotent,
                       "", ok));
    }
    j["checks"] = std::move(checks);
    return j;
}

json cmdHH(const RunConfig& cfg, const Group& G, CohomologyContext& coh,
           bool& ok) {
    HHContext ctx(G, cfg.p, coh);
    json j;
    json degs = json::array();
    for (int n = 0; n <= cfg.maxDegree; ++n) {
        HHSpace sp = hhSpace(ctx, n);
        degs.push_back(json{{"degree", n},
                            {"dim", sp.dim()},
                            {"componentDims", sp.componentDims()}});
    }
    j["dims"] = std::move(degs);

    json checks = json::array();
    HHElement one = hhUnit(ctx);
    HHSpace h1 = hhSpace(ctx, 1);
    std::vector<HHElement> basis;
    for (int c = 0; c < ctx.componentCount(); ++c)
        for (int i = 0; i < h1.components[c]->dim(); ++i)
            basis.push_back(hhBasisElement(ctx, h1, c, i));
    bool unitOk = true;
    for (const HHElement& b : basis)
        if (!(swProduct(one, b) == b) || !(swProduct(b, one) == b))
            unitOk = false;
    checks.push_back(checkEntry("unit-two-sided-degree-1", unitOk, "", ok));
    bool commOk = true;
    for (const HHElement& a : basis)
        for (const HHElement& b : basis)
            if (!(swProduct(a, b) == swProduct(b, a))) commOk = false;
    checks.push_back(checkEntry("commutative-degree-1", commOk, "", ok));
    j["checks"] = std::move(checks);
    return j;
}

json cmdExtensionDelta(const RunConfig& cfg, const Group& E, bool& ok) {
    if (!E.isPGroup(cfg.p))
        throw ReportError("extension-delta expects a p-group for p = " +
                          std::to_string(cfg.p));
    int z = -1;
    if (!cfg.element.empty()) {
        z = resolveElement(E, cfg.p, cfg.element);
    } else {
        for (int c : center(E).elements)
            if (E.elementOrder(c) == cfg.p) { z = c; break; }
    }
    if (z < 0 || E.elementOrder(z) != cfg.p || !center(E).contains(z))
        throw ReportError("need a central element of order p");

    QuotientGroup Q = quotientGroup(E, subgroupGenerated(E, {z}));
    // discrete log of the kernel inside the section defect
    std::vector<int> smallest(Q.group.order(), -1);
    for (int a = 0; a < E.order(); ++a)
        if (smallest[Q.projection[a]] < 0) smallest[Q.projection[a]] = a;
    auto dlog = [&](int k) {
        int acc = E.identity();
        for (int l = 0; l < cfg.p; ++l) {
            if (acc == k) return l;
            acc = E.mul(acc, z);
        }
        throw ReportError("section defect escapes the kernel");
    };
    Cochain alpha(Q.group, cfg.p, 2);
    for (int a = 0; a < Q.group.order(); ++a)
        for (int b = 0; b < Q.group.order(); ++b) {
            int defect = E.mul(E.mul(smallest[a], smallest[b]),
                               E.inv(smallest[Q.group.mul(a, b)]));
            alpha.setValue({a, b}, dlog(defect));
        }
    ExtensionCocycle ext = extensionFromCocycle(Q.group, alpha);

    json j;
    j["kernelGenerator"] = E.label(z);
    j["quotientOrder"] = Q.group.order();
    json checks = json::array();
    json per = json::array();
    for (int g : centralElements(Q.group, true)) {
        ExtensionDelta d = deltaFromExtension(ext, g);
        json values = json::object();
        for (int h = 0; h < Q.group.order(); ++h)
            if (h != Q.group.identity() && d.hom.value({h}) != 0)
                values[Q.group.label(h)] = d.hom.value({h});
        per.push_back(json{{"element", Q.group.label(g)},
                           {"homValues", std::move(values)},
                           {"matchesCommutators", d.matchesCommutators}});
        checks.push_back(checkEntry(
            "commutator-match " + Q.group.label(g), d.matchesCommutators, "",
            ok));
    }
    j["centralElements"] = std::move(per);
    j["checks"] = std::move(checks);
    return j;
}

json cmdVerify(const RunConfig& cfg, const Group& G, CohomologyContext& coh,
               bool& ok) {
    json checks = json::array();
    const int p = cfg.p;
    std::vector<int> central = centralElements(G, true);

    if (G.order() <= 16) {
        bool pass = true;
        std::string detail;
        for (int g : centralElements(G, false))
            for (int n = 0; n <= std::min(cfg.maxDegree, 3); ++n) {
                HomotopyCheckResult r = verifyHomotopyIdentity(G, g, n);
                if (!r.pass) {
                    pass = false;
                    detail = "fails at g = " + G.label(g) + ", degree " +
                             std::to_string(n);
                }
            }
        checks.push_back(checkEntry("homotopy-identity", pass, detail, ok));
    }

    {
        bool pass = true;
        auto h1 = coh.space(G, p, 1);
        for (int g : central) {
            DeltaMatrix M = deltaMatrix(coh, G, p, g, 1);
            for (int i = 0; i < M.cols(); ++i) {
                Cochain rep = h1->representative(i);
                int want = g == G.identity() ? 0 : rep.value({g});
                if (M.columns[i] != FpVec{static_cast<uint16_t>(want)})
                    pass = false;
            }
        }
        checks.push_back(checkEntry("degree-1-evaluation", pass, "", ok));
    }

    {
        bool pass = true;
        for (int g : central)
            for (int n = 2; n <= cfg.maxDegree; ++n) {
                DeltaMatrix Mn = deltaMatrix(coh, G, p, g, n);
                DeltaMatrix Mn1 = deltaMatrix(coh, G, p, g, n - 1);
                for (const FpVec& col : Mn.columns)
                    for (auto x : Mn1.apply(col))
                        if (x != 0) pass = false;
            }
        checks.push_back(checkEntry("delta-squared-zero", pass, "", ok));
    }

    {
        bool pass = true;
        for (int g : central)
            for (int h : central) {
                int gh = G.mul(g, h);
                if (gh == G.identity()) continue;
                for (int n = 1; n <= std::min(cfg.maxDegree, 2); ++n) {
                    DeltaMatrix Mg = deltaMatrix(coh, G, p, g, n);
                    DeltaMatrix Mh = deltaMatrix(coh, G, p, h, n);
                    DeltaMatrix Mgh = deltaMatrix(coh, G, p, gh, n);
                    for (int i = 0; i < Mg.cols(); ++i)
                        for (int r = 0; r < Mg.rows(); ++r)
                            if ((Mg.columns[i][r] + Mh.columns[i][r]) % p !=
                                Mgh.columns[i][r])
                                pass = false;
                }
            }
        checks.push_back(checkEntry("delta-additive", pass, "", ok));
    }

    {
        bool pass = true;
        std::mt19937 rng(cfg.seed);
        for (int trial = 0; trial < 5; ++trial) {
            Cochain c = randomCochain(G, p, 1, rng);
            if (!coh.classOf(coboundary(c)).isZero()) pass = false;
        }
        checks.push_back(
            checkEntry("random-coboundaries-vanish", pass, "", ok));
    }

    if (G.isPGroup(p)) {
        HHContext ctx(G, p, coh);
        HH1Lie L = buildHH1Lie(ctx);

        LieAxiomReport axioms = verifyLieAxioms(L.algebra);
        checks.push_back(
            checkEntry("hh1-lie-axioms", axioms.pass, axioms.violation, ok));

        // gerstenhaberBracket throws on BV-vs-direct disagreement
        bool pass = true;
        std::string detail;
        HHSpace h1 = hhSpace(ctx, 1);
        std::vector<HHElement> basis;
        for (int c = 0; c < ctx.componentCount(); ++c)
            for (int i = 0; i < h1.components[c]->dim(); ++i)
                basis.push_back(hhBasisElement(ctx, h1, c, i));
        try {
            for (const HHElement& a : basis)
                for (const HHElement& b : basis) (void)gerstenhaberBracket(a, b);
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        checks.push_back(checkEntry("bv-bracket-consistency", pass, detail, ok));

        Subgroup K = intersect(center(G), frattiniSubgroup(G));
        std::vector<Cochain> homs = h1Homs(G, p);
        bool zk = true;
        for (int z : K.elements)
            for (int w : K.elements)
                for (const Cochain& x : homs)
                    for (const Cochain& y : homs) {
                        auto mk = [&](int c, const Cochain& hom) {
                            const CentraliserData& C = ctx.componentOf(c);
                            std::vector<int> vals(G.order(), 0);
                            for (int a = 0; a < G.order(); ++a)
                                if (a != G.identity()) vals[a] = hom.value({a});
                            return hhComponentElement(
                                ctx, c,
                                coh.classOf(homCochain(C.emb.group, p, vals)));
                        };
                        if (!directBracketDegree1(mk(z, x), mk(w, y)).isZero())
                            zk = false;
                    }
        checks.push_back(
            checkEntry("centre-frattini-bracket-vanishes", zk, "", ok));

        if (G.order() > 1) {
            NonNilpotencyWitness nw = constructNonNilpotencyWitness(L);
            checks.push_back(
                checkEntry("non-nilpotency-witness", nw.verified, "", ok));
        }
    }

    return json{{"checks", std::move(checks)}};
}

// ---- rendering ---------------------------------------------------------

void renderText(const json& j, std::ostream& os, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() &&
                                  (v[0].is_object() || v[0].is_array()))) {
                os << pad << k << ":\n";
                renderText(v, os, indent + 2);
            } else {
                os << pad << k << ": " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || (v.is_array() && !v.empty() &&
                                  (v[0].is_object() || v[0].is_array()))) {
                os << pad << "-\n";
                renderText(v, os, indent + 2);
            } else {
                os << pad << "- " << v.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

}  // namespace

Group loadGroup(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw ReportError("cannot open " + spec.substr(1));
        json j = json::parse(in);
        std::vector<std::vector<int>> mul =
            j.at("mul").get<std::vector<std::vector<int>>>();
        std::vector<std::string> labels;
        if (j.contains("labels"))
            labels = j["labels"].get<std::vector<std::string>>();
        std::string name = j.value("name", spec.substr(1));
        return groupFromTable(name, std::move(mul), std::move(labels));
    }
    return constructGroup(spec);
}

int resolveElement(const Group& G, int p, const std::string& name) {
    if (name == "gamma") {
        for (int z : center(G).elements)
            if (G.elementOrder(z) == p) return z;
        throw ReportError("no central element of order " + std::to_string(p));
    }
    for (int a = 0; a < G.order(); ++a)
        if (G.label(a) == name) return a;
    throw ReportError("no element labelled '" + name + "' in " + G.name());
}

json runCommand(const RunConfig& cfg, bool& ok) {
    ok = true;
    Group G = loadGroup(cfg.groupSpec);
    CohomologyContext coh;
    coh.setHeavy(cfg.heavy);

    json doc;
    doc["schema"] = "bvh/1";
    doc["command"] = cfg.command;
    doc["group"] = G.name();
    doc["p"] = cfg.p;
    if (!isPrime(cfg.p)) throw ReportError("p must be prime");

    if (cfg.command == "info")
        doc["result"] = cmdInfo(cfg, G, ok);
    else if (cfg.command == "cohomology")
        doc["result"] = cmdCohomology(cfg, G, coh, ok);
    else if (cfg.command == "delta")
        doc["result"] = cmdDelta(cfg, G, coh, ok);
    else if (cfg.command == "hh1-lie")
        doc["result"] = cmdHH1Lie(cfg, G, coh, ok);
    else if (cfg.command == "hh")
        doc["result"] = cmdHH(cfg, G, coh, ok);
    else if (cfg.command == "extension-delta")
        doc["result"] = cmdExtensionDelta(cfg, G, ok);
    else if (cfg.command == "verify")
        doc["result"] = cmdVerify(cfg, G, coh, ok);
    else
        throw ReportError("unknown command '" + cfg.command + "'");

    doc["ok"] = ok;
    return doc;
}

std::string renderReport(const json& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    if (format != "text")
        throw ReportError("unknown format '" + format + "'");
    std::ostringstream os;
    renderText(doc, os, 0);
    return os.str();
}

int executeCommand(const RunConfig& cfg, std::ostream& out) {
    bool ok = true;
    try {
        json doc = runCommand(cfg, ok);
        out << renderReport(doc, cfg.format);
    } catch (const std::exception& e) {
        json doc{{"schema", "bvh/1"},
                 {"command", cfg.command},
                 {"error", e.what()},
                 {"ok", false}};
        out << renderReport(doc, cfg.format);
        return 2;
    }
    return ok ? 0 : 1;
}

}  // namespace bvh

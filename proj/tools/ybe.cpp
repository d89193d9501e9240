// ybe: build, verify, analyze and transform braces, set-theoretic solutions,
// weight systems and R-matrices stored as JSON object files.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input or usage.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ybe/io.hpp"
#include "ybe/rmatrix.hpp"

using namespace ybe;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double tol = kDefaultTol;
    bool json_out = false;
    std::string out;

    // builder parameters
    int n = 3, p = 2, deg = 3, step = 2, mod = 8, dim = 3, x = -1, index = 0;  // x < 0: no generator given
    std::string ring, from, name, g, d, value = "1", alpha = "1", beta = "-2/9", classes, table;

    // transform parameters
    std::string pmat = "vandermonde3", map = "id", ideal = "socle";
    bool inverse = false, entrywise = false;
};

Options opt;

// ---- small helpers --------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::vector<cplx> parse_values(const std::string& s, const char* what) {
    if (s.empty()) throw InputError(std::string("--") + what + " needs a comma-separated list of values");
    std::vector<cplx> out;
    for (const auto& t : split(s, ',')) out.push_back(parse_complex_text(t));
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(t, &used));
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw InputError("bad integer '" + t + "'");
        }
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string fmt(cplx z) {
    if (std::abs(z.imag()) <= 1e-12) return fmt(z.real());
    return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

json load(const std::string& path) {
    if (path.empty()) throw InputError("missing input file");
    return read_json_file(path);
}

// Annotates exact rationals when every entry has one, as in the golden files.
json matrix_json(const CMatrix& m) {
    std::vector<std::string> rat;
    for (const auto& z : m.data()) {
        if (z.imag() != 0.0) return to_json(m);
        const auto t = rational_text(z.real());
        if (!t) return to_json(m);
        rat.push_back(*t);
    }
    return to_json(m, rat);
}

void emit(json obj, const std::string& summary) {
    if (opt.out.empty()) {
        std::cout << canonical_dump(obj);
        return;
    }
    write_json_file(opt.out, obj);
    std::cout << summary << " -> " << opt.out << "\n";
}

FiniteRing ring_from_options() {
    if (opt.ring == "truncpoly") return make_truncated_polynomial_ring(opt.p, opt.deg);
    if (opt.ring == "multiple") return make_multiple_ring(opt.step, opt.mod);
    if (opt.ring == "zero") return make_zero_ring(opt.n);
    if (opt.ring == "ut") return make_strict_upper_triangular_ring(opt.p, opt.dim);
    throw InputError("--ring must be truncpoly, multiple, zero or ut");
}

// A brace from --from (brace or ring file) or from --ring parameters.
FiniteBrace brace_input(const std::string& path) {
    if (!path.empty()) {
        const auto j = load(path);
        if (object_kind(j) == ObjectKind::ring) return brace_from_nilpotent_ring(ring_from_json(j));
        return brace_from_json(j);
    }
    if (opt.ring.empty()) throw InputError("give a brace file or --ring parameters");
    return brace_from_nilpotent_ring(ring_from_options());
}

SetSolution solution_input(const std::string& path) { return solution_from_json(load(path)); }

// Weight files carry the solution they live on under "solution".
std::pair<WeightSystem, SetSolution> weights_input(const std::string& path) {
    const auto j = load(path);
    auto w = weights_from_json(j);
    if (!j.contains("solution")) throw InputError(path + ": weights carry no \"solution\" to check against");
    return {w, solution_from_json(j.at("solution"))};
}

json weights_json(const WeightSystem& w, const SetSolution& s) {
    auto j = to_json(w);
    j["solution"] = to_json(s);
    return j;
}

std::string points(int n) { return std::to_string(n) + (n == 1 ? " point" : " points"); }

std::string origin_inputs(const std::vector<std::string>& inputs) {
    std::string s;
    for (const auto& i : inputs) s += (s.empty() ? "" : " ") + std::filesystem::path(i).filename().string();
    return s;
}

BraceSubset chain_term(const ChainReport& c, int k) {
    if (k < 1) throw InputError("chain index must be at least 1");
    if (static_cast<size_t>(k) <= c.chain.size()) return c.term(k);
    if (c.vanishes) return BraceSubset({0});
    return c.chain.back();
}

BraceSubset ideal_from_spec(const FiniteBrace& b, const std::string& spec) {
    if (spec == "socle") return socle(b);
    if (spec == "whole") return whole(b);
    if (spec == "zero") return BraceSubset({0});
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("unknown ideal '" + spec + "'");
    const std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
    if (head == "members") return BraceSubset(parse_ints(tail));
    const auto ks = parse_ints(tail);
    if (ks.size() != 1) throw InputError("chain ideal takes one index");
    const auto ch = nilpotency_chains(b);
    if (head == "left") return chain_term(ch.left, ks[0]);
    if (head == "right") return chain_term(ch.right, ks[0]);
    if (head == "strong") return chain_term(ch.strong, ks[0]);
    throw InputError("ideal must be socle, whole, zero, left:K, right:K, strong:K or members:a,b,...");
}

// ---- build --------------------------------------------------------------------

int cmd_build(const std::string& kind, const std::string& what) {
    if (kind == "ring") {
        opt.ring = what;
        const auto r = ring_from_options();
        emit(to_json(r), "ring of order " + std::to_string(r.order()));
        return 0;
    }
    if (kind == "brace") {
        FiniteBrace b;
        if (what == "trivial") {
            b = trivial_brace(opt.n);
        } else if (what == "from-ring") {
            b = brace_input(opt.from);
        } else if (what == "exact-factorization") {
            const auto base = brace_input(opt.from);
            const auto facs = find_exact_factorizations(base);
            if (opt.index < 0 || static_cast<size_t>(opt.index) >= facs.size())
                throw InputError("brace has " + std::to_string(facs.size()) + " exact factorizations");
            b = brace_from_exact_factorization(base, facs[opt.index].b_sub, facs[opt.index].c_sub);
        } else {
            throw InputError("brace builders: trivial, from-ring, exact-factorization");
        }
        emit(to_json(b), "brace of order " + std::to_string(b.order()));
        return 0;
    }
    if (kind == "solution") {
        SetSolution s;
        json extra;
        if (what == "flip" || what == "cyclic" || what == "hura5") {
            const auto k = parse_builtin_solution(what);
            s = builtin_solution(k, k == BuiltinSolution::hura5 ? 4 : opt.n);
        } else if (what == "from-brace") {
            s = yb_map_from_brace(brace_input(opt.from));
        } else if (what == "one-generator") {
            const auto b = brace_input(opt.from);
            const int x = opt.x < 0 ? 1 : opt.x;
            if (x >= b.order()) throw InputError("--x outside the brace");
            const auto og = one_generator_solution(b, x);
            s = og.solution;
            std::vector<int> amb;
            for (Elem e : og.x_set.members) amb.push_back(og.sub.embedding[e]);
            extra["members"] = amb;
        } else {
            throw InputError("solution builders: flip, cyclic, hura5, from-brace, one-generator");
        }
        auto j = to_json(s);
        for (auto& [k, v] : extra.items()) j[k] = v;
        emit(j, "solution on " + points(s.size()));
        return 0;
    }
    if (kind == "weights") {
        SetSolution s;
        WeightSystem w;
        if (what == "cyclic_g") {
            const auto g = parse_values(opt.g, "g");
            s = cyclic_solution(static_cast<int>(g.size()));
            w = cyclic_g_weights(g);
        } else if (what == "hura5_g") {
            s = hura5_solution();
            w = builtin_weights(BuiltinWeights::hura5_g, parse_values(opt.g, "g"));
        } else if (what == "constant") {
            s = solution_input(opt.from);
            w = WeightSystem::constant(s.size(), parse_complex_text(opt.value));
        } else if (what == "orbit") {
            s = solution_input(opt.from);
            PartitionedSet p{s.size(), {}};
            for (const auto& c : split(opt.classes, ';')) p.classes.push_back(parse_ints(c));
            std::vector<std::vector<cplx>> alpha;
            for (const auto& row : split(opt.table, ';')) alpha.push_back(parse_values(row, "table"));
            w = orbit_weights(s, p, alpha);
        } else if (what == "nontrivial") {
            if (!opt.ring.empty() || (!opt.from.empty() && object_kind(load(opt.from)) != ObjectKind::solution)) {
                // one-generator presentation from a brace and generator
                const auto b = brace_input(opt.from);
                const int x = opt.x < 0 ? 1 : opt.x;
                if (x >= b.order()) throw InputError("--x outside the brace");
                const auto og = one_generator_solution(b, x);
                s = og.solution;
                w = construct_nontrivial_bvst(s, &og);
            } else {
                s = solution_input(opt.from);
                w = construct_nontrivial_bvst(s);
            }
        } else {
            throw InputError("weight builders: cyclic_g, hura5_g, constant, orbit, nontrivial");
        }
        emit(weights_json(w, s), "weights on " + points(s.size()));
        return 0;
    }
    if (kind == "matrix") {
        CMatrix m;
        std::string label;
        if (what == "example") {
            m = named_example(opt.name);
            label = opt.name;
        } else if (what == "monomial") {
            const auto [w, s] = weights_input(opt.from);
            m = monomial_from_bvst(s, w);
            label = "monomial";
        } else if (what == "solution") {
            m = solution_matrix(solution_input(opt.from));
            label = "solution matrix";
        } else {
            ExampleParams p;
            p.n = opt.n;
            if (!opt.d.empty()) p.d = parse_values(opt.d, "d");
            p.alpha = parse_complex_text(opt.alpha);
            p.beta = parse_complex_text(opt.beta);
            m = build_example(parse_example_kind(what), p);
            label = what;
        }
        emit(matrix_json(m), label + " " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
        return 0;
    }
    if (kind == "partition") {
        const auto b = brace_input(opt.from);
        const auto part = invariant_partition(parse_partition_kind(what), b);
        auto j = to_json(part.classes);
        j["solution"] = to_json(yb_map_from_brace(b));
        emit(j, std::to_string(part.classes.classes.size()) + " classes");
        return 0;
    }
    throw InputError("unknown kind '" + kind + "' (brace, ring, solution, weights, matrix, partition)");
}

// ---- verify -------------------------------------------------------------------

int report(bool pass, const std::string& text, json detail) {
    if (opt.json_out) {
        detail["pass"] = pass;
        std::cout << canonical_dump(detail);
    } else {
        std::cout << (pass ? "PASS " : "FAIL ") << text << "\n";
    }
    return pass ? 0 : kExitFail;
}

int cmd_verify(const std::string& path) {
    const auto j = load(path);
    switch (object_kind(j)) {
        case ObjectKind::brace: {
            // the constructor already rejects non-groups; re-check the compatibility law
            const auto b = brace_from_json(j);
            const auto rep = verify_brace(b.add_table(), b.circ_table());
            std::string text = "brace of order " + std::to_string(b.order());
            if (!rep.is_brace) {
                const auto& v = rep.violations.front();
                text += ": " + v.axiom + " fails at (" + std::to_string(v.a) + "," + std::to_string(v.b) + "," +
                        std::to_string(v.c) + ")";
            }
            return report(rep.is_brace, text, {{"kind", "brace"}, {"violations", rep.violations.size()}});
        }
        case ObjectKind::ring: {
            const auto r = ring_from_json(j);
            const bool ok = verify_ring(r);
            const auto cls = ring_nilpotency_class(r);
            return report(ok, "ring of order " + std::to_string(r.order()) + (cls ? ", nilpotent" : ", not nilpotent"),
                          {{"kind", "ring"}, {"nilpotent", cls.has_value()}});
        }
        case ObjectKind::solution: {
            const auto s = solution_from_json(j);
            const auto p = solution_properties(s);
            std::string text = points(s.size()) + ":";
            text += p.braid_ok ? " braid_ok" : " braid_FAILS";
            if (p.involutive) text += " involutive";
            if (p.nondegenerate()) text += " nondeg";
            else if (p.left_nondeg || p.right_nondeg) text += p.left_nondeg ? " left-nondeg" : " right-nondeg";
            if (!p.braid_ok) {
                const auto v = find_braid_violation(s);
                text += " at (" + std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) + "," + std::to_string((*v)[2]) + ")";
            }
            return report(p.braid_ok, text,
                          {{"kind", "solution"}, {"braid_ok", p.braid_ok}, {"involutive", p.involutive},
                           {"left_nondeg", p.left_nondeg}, {"right_nondeg", p.right_nondeg}});
        }
        case ObjectKind::weights: {
            const auto [w, s] = weights_input(path);
            const auto bad = find_cocycle_violation(s, w, opt.tol);
            std::string text = "weights on " + points(s.size()) + ": cocycle ";
            text += bad ? "fails at (" + std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) + "," +
                              std::to_string((*bad)[2]) + ")"
                        : "holds";
            return report(!bad, text, {{"kind", "weights"}, {"cocycle", !bad}});
        }
        case ObjectKind::matrix: {
            const auto m = matrix_from_json(j);
            const int n = base_dimension(m);
            const auto q = qybe_check(m, n, opt.tol);
            const auto ns = nonsingularity(m, opt.tol);
            std::string text = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix: QYBE " +
                               (q.ok ? "holds" : "fails") + ", residual " + fmt(q.residual) + ", " +
                               (ns.nonsingular ? "nonsingular" : "singular");
            if (q.ok) text += ns.nonsingular ? " (R-matrix)" : " (not an R-matrix)";
            return report(q.ok, text,
                          {{"kind", "matrix"}, {"qybe", q.ok}, {"residual", q.residual}, {"nonsingular", ns.nonsingular},
                           {"det_abs", ns.det_abs}});
        }
        case ObjectKind::partition: {
            const auto p = partition_from_json(j);
            if (!j.contains("solution")) {
                return report(true, std::to_string(p.classes.size()) + " disjoint classes (no solution to test invariance)",
                              {{"kind", "partition"}});
            }
            const auto s = solution_from_json(j.at("solution"));
            if (s.size() != p.n) throw InputError("partition and solution sizes differ");
            const auto bad = partition_invariance_violation(s, p);
            std::string text = std::to_string(p.classes.size()) + " classes: ";
            text += bad ? "r(" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ") leaves its block pair"
                        : "invariant";
            return report(!bad, text, {{"kind", "partition"}, {"invariant", !bad}});
        }
    }
    throw InputError("unsupported object");
}

// ---- analyze ------------------------------------------------------------------

void print(const json& j, const std::string& text) {
    if (opt.json_out) std::cout << canonical_dump(j);
    else std::cout << text << "\n";
}

int cmd_analyze(const std::string& what, const std::string& path) {
    const auto j = load(path);
    const auto kind = object_kind(j);
    auto need = [&](ObjectKind k) {
        if (kind != k) throw InputError("'" + what + "' needs a " + kind_name(k) + " file, got " + kind_name(kind));
    };
    if (what == "orbits") {
        need(ObjectKind::solution);
        const auto o = orbits(solution_from_json(j));
        const auto k = o.orbits.classes.size();
        print({{"orbits", o.orbits.classes}, {"indecomposable", o.indecomposable}},
              std::to_string(k) + (k == 1 ? " orbit, " : " orbits, ") + (o.indecomposable ? "indecomposable" : "decomposable"));
        return 0;
    }
    if (what == "mpl") {
        need(ObjectKind::solution);
        const auto m = multipermutation_level(solution_from_json(j));
        print({{"mpl", m ? json(*m) : json(nullptr)}}, m ? std::to_string(*m) : "infinite (retraction stalls)");
        return 0;
    }
    if (what == "permgroup") {
        need(ObjectKind::solution);
        const auto g = permutation_group(solution_from_json(j));
        print({{"order", g.elements.size()}, {"nilpotent", g.is_nilpotent}},
              "order " + std::to_string(g.elements.size()) + (g.is_nilpotent ? ", nilpotent" : ", not nilpotent"));
        return 0;
    }
    if (what == "svd") {
        need(ObjectKind::matrix);
        const auto sv = singular_values(matrix_from_json(j));
        std::string text;
        for (double v : sv) text += (text.empty() ? "" : " ") + fmt(v);
        print({{"singular_values", sv}}, text);
        return 0;
    }
    if (what == "classify") {
        need(ObjectKind::matrix);
        const auto m = matrix_from_json(j);
        const auto rep = classify_involutive_matrix(m, base_dimension(m));
        json out{{"permutation", rep.permutation},
                 {"symmetric", rep.symmetric},
                 {"squares_to_identity", rep.squares_to_identity},
                 {"block_condition", rep.block_condition},
                 {"braid_ok", rep.braid_ok}};
        if (rep.solution) out["solution"] = to_json(*rep.solution);
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        std::string text = std::string("permutation ") + yn(rep.permutation) + ", symmetric " + yn(rep.symmetric) +
                           ", A²=I " + yn(rep.squares_to_identity) + ", one 1 per block " + yn(rep.block_condition);
        text += rep.solution ? std::string("; involutive non-degenerate solution, braid ") + yn(rep.braid_ok)
                             : "; not the matrix of an involutive non-degenerate solution";
        print(out, text);
        return 0;
    }
    if (what == "triviality") {
        need(ObjectKind::weights);
        const auto [w, s] = weights_input(path);
        const auto r = is_trivial(s, w, opt.tol);
        json out{{"trivial", r.trivial}, {"kernel_residual", r.kernel_residual}};
        std::string text = r.trivial ? "trivial" : "non-trivial";
        if (r.witness) {
            json alpha = json::array();
            for (auto z : r.witness->alpha) alpha.push_back(json::array({z.real(), z.imag()}));
            out["witness"] = {{"alpha", alpha}, {"c", json::array({r.witness->c.real(), r.witness->c.imag()})}};
            text += ", c = " + fmt(r.witness->c);
        } else {
            text += ", kernel residual " + fmt(r.kernel_residual);
        }
        print(out, text);
        return 0;
    }
    if (what == "chains") {
        const auto b = brace_input(path);
        const auto ch = nilpotency_chains(b);
        json out;
        std::string text;
        for (const auto& [label, c] : {std::pair{"left", &ch.left}, {"right", &ch.right}, {"strong", &ch.strong}}) {
            std::vector<size_t> sizes;
            for (const auto& t : c->chain) sizes.push_back(t.size());
            out[label] = {{"sizes", sizes}, {"vanish_index", c->vanish_index ? json(*c->vanish_index) : json(nullptr)}};
            text += std::string(text.empty() ? "" : "; ") + label + " " +
                    (c->vanishes ? "vanishes at " + std::to_string(*c->vanish_index) : "does not vanish");
        }
        print(out, text);
        return 0;
    }
    throw InputError("analyses: orbits, mpl, permgroup, svd, classify, triviality, chains");
}

// ---- transform ----------------------------------------------------------------

CMatrix matrix_arg(const std::vector<std::string>& in, size_t k) {
    if (in.size() <= k) throw InputError("missing matrix operand");
    return matrix_from_json(load(in[k]));
}

int cmd_transform(const std::string& op, const std::vector<std::string>& in) {
    json origin{{"op", op}, {"inputs", origin_inputs(in)}};
    if (op == "kron") {
        const auto m = kron(matrix_arg(in, 0), matrix_arg(in, 1));
        auto j = matrix_json(m);
        j["origin"] = origin;
        emit(j, "kron " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
        return 0;
    }
    if (op == "hadamard") {
        const auto a = matrix_arg(in, 0), b = matrix_arg(in, 1);
        const auto m = opt.entrywise ? hadamard(a, b) : hadamard_rmatrix(a, b, opt.tol);
        origin["entrywise"] = opt.entrywise;
        auto j = matrix_json(m);
        j["origin"] = origin;
        emit(j, "hadamard product");
        return 0;
    }
    if (op == "similarity") {
        const auto x = matrix_arg(in, 0);
        CMatrix p = opt.pmat == "vandermonde3" ? vandermonde_p(3) : matrix_from_json(load(opt.pmat));
        if (opt.inverse) p = inverse(p);
        const auto m = conjugate_similarity(p, x);
        origin["p"] = std::filesystem::path(opt.pmat).filename().string();
        origin["inverse"] = opt.inverse;
        auto j = matrix_json(m);
        j["origin"] = origin;
        emit(j, std::string("(P⊗P)") + (opt.inverse ? "⁻¹" : "") + " similarity");
        return 0;
    }
    if (op == "gmap") {
        const auto g = MultiplicativeMap::parse(opt.map);
        const auto m = apply_multiplicative_map(matrix_arg(in, 0), g);
        origin["map"] = g.str();
        auto j = matrix_json(m);
        j["origin"] = origin;
        emit(j, "map " + g.str());
        return 0;
    }
    if (op == "retract") {
        if (in.empty()) throw InputError("retract needs a solution file");
        const auto s = solution_input(in[0]);
        const auto q = retraction(s);
        auto j = to_json(q.solution);
        j["class_map"] = q.class_map;
        j["source"] = to_json(s);
        j["origin"] = origin;
        emit(j, "retraction to " + points(q.solution.size()));
        return 0;
    }
    if (op == "i-retract") {
        const auto b = brace_input(in.empty() ? opt.from : in[0]);
        FiniteBrace host = b;
        Restriction sub;
        if (opt.x >= 0) {
            // the one-generator solution of x, inside A(x)
            if (opt.x >= b.order()) throw InputError("--x outside the brace");
            const auto og = one_generator_solution(b, opt.x);
            host = og.sub.brace;
            sub = {og.solution, og.x_set.members};
            origin["generator"] = opt.x;
        } else {
            sub = {yb_map_from_brace(b), whole(b).members};
        }
        const auto ideal = ideal_from_spec(host, opt.ideal);
        const auto q = i_retraction(host, ideal, sub);
        origin["ideal"] = opt.ideal;
        auto j = to_json(q.solution);
        j["class_map"] = q.class_map;
        j["source"] = to_json(sub.solution);
        j["origin"] = origin;
        emit(j, "I-retraction to " + points(q.solution.size()));
        return 0;
    }
    if (op == "lift-weights") {
        if (in.size() < 2) throw InputError("lift-weights needs a quotient file and a weights file");
        const auto qj = load(in[0]);
        if (!qj.contains("class_map") || !qj.contains("source"))
            throw InputError(in[0] + ": not a retraction (needs \"class_map\" and \"source\")");
        const Retraction q{solution_from_json(qj), qj.at("class_map").get<std::vector<int>>()};
        const auto src = solution_from_json(qj.at("source"));
        auto [dq, qs] = weights_input(in[1]);
        if (!(qs == q.solution)) {
            // transport along an isomorphism, e.g. hura5_g weights onto a relabeled quotient
            const auto phi = find_isomorphism(q.solution, qs);
            if (!phi) throw InputError("weights live on a solution not isomorphic to the quotient");
            const int k = qs.size();
            std::vector<cplx> pulled;
            for (int u = 0; u < k; ++u)
                for (int v = 0; v < k; ++v) pulled.push_back(dq((*phi)[u], (*phi)[v]));
            dq = WeightSystem(k, pulled);
            origin["relabel"] = *phi;
        }
        const auto w = lift_weights(src, q, dq, opt.tol);
        auto j = weights_json(w, src);
        j["origin"] = origin;
        emit(j, "lifted weights on " + points(src.size()));
        return 0;
    }
    throw InputError("transforms: kron, hadamard, similarity, gmap, retract, i-retract, lift-weights");
}

// ---- example ------------------------------------------------------------------

int cmd_example(const std::string& which, const std::string& dir) {
    const auto names = which == "all" ? named_examples() : std::vector<std::string>{which};
    if (!dir.empty()) std::filesystem::create_directories(dir);
    for (const auto& name : names) {
        const auto m = named_example(name);
        std::string line = name + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols());
        const int n = static_cast<int>(std::lround(std::sqrt(m.rows())));
        if (m.square() && n * n == m.rows()) {
            const auto q = qybe_check(m, n, opt.tol);
            const bool rm = q.ok && nonsingularity(m, opt.tol).nonsingular;
            line += ", QYBE " + std::string(q.ok ? "holds" : "fails") + " (residual " + fmt(q.residual) + ")" +
                    (rm ? ", R-matrix" : "");
        }
        if (m.square() && is_unitary(m, opt.tol)) line += ", unitary";
        if (!dir.empty()) {
            const auto path = (std::filesystem::path(dir) / (name + ".json")).string();
            write_json_file(path, matrix_json(m));
            line += " -> " + path;
        }
        std::cout << line << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("YBE_TOL")) {
        try {
            opt.tol = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "error: YBE_TOL is not a number\n";
            return kExitInput;
        }
    }

    CLI::App app{"Set-theoretic and matrix solutions of the Yang-Baxter equation"};
    app.require_subcommand(1);
    app.add_option("--tol", opt.tol, "numeric tolerance (default 1e-9, or $YBE_TOL)");

    auto ring_opts = [](CLI::App* c) {
        c->add_option("--ring", opt.ring, "truncpoly | multiple | zero | ut");
        c->add_option("--deg", opt.deg, "truncpoly: F_p[x] modulo x^deg");
        c->add_option("--step", opt.step, "multiple: step·Z / mod·Z");
        c->add_option("--mod", opt.mod, "multiple: modulus");
        c->add_option("--dim", opt.dim, "ut: matrix size");
        c->add_option("--from", opt.from, "input object file");
        c->add_option("--x", opt.x, "generator (brace index, default 1)");
    };

    std::string kind, what, path, which = "all", dir;
    std::vector<std::string> inputs;

    auto* build = app.add_subcommand("build", "construct an object file");
    build->add_option("kind", kind, "brace | ring | solution | weights | matrix | partition")->required();
    build->add_option("what", what, "builder name")->required();
    ring_opts(build);
    build->add_option("--p", opt.p, "prime for truncpoly / ut");
    build->add_option("--n", opt.n, "size");
    build->add_option("--index", opt.index, "which exact factorization");
    build->add_option("--name", opt.name, "named example (A1, A2, Ad, P, C, X, XoX, Cpinv)");
    build->add_option("--g", opt.g, "comma-separated weights, e.g. 1,2,1 or 1@1/3");
    build->add_option("--d", opt.d, "A_of_d entries");
    build->add_option("--value", opt.value, "constant weight");
    build->add_option("--alpha", opt.alpha, "alphaB_betaE: coefficient of B");
    build->add_option("--beta", opt.beta, "alphaB_betaE: coefficient of E");
    build->add_option("--classes", opt.classes, "orbit weights: classes, e.g. 0,1;2");
    build->add_option("--table", opt.table, "orbit weights: class-pair table, e.g. 1,2;1,1");
    build->add_option("-o,--out", opt.out, "output file (default: standard output)");

    auto* verify = app.add_subcommand("verify", "check the defining identities of an object file");
    verify->add_option("path", path)->required();
    verify->add_flag("--json", opt.json_out, "machine-readable report");
    verify->add_option("--tol", opt.tol);

    auto* analyze = app.add_subcommand("analyze", "orbits | mpl | permgroup | svd | classify | triviality | chains");
    analyze->add_option("what", what)->required();
    analyze->add_option("path", path)->required();
    analyze->add_flag("--json", opt.json_out, "machine-readable output");
    analyze->add_option("--tol", opt.tol);

    auto* transform = app.add_subcommand("transform", "kron | hadamard | similarity | gmap | retract | i-retract | lift-weights");
    transform->add_option("op", what)->required();
    transform->add_option("inputs", inputs);
    ring_opts(transform);
    std::string p_text;
    transform->add_option("--p", p_text, "similarity: vandermonde3 or a matrix file; otherwise the ring prime");
    transform->add_flag("--inverse", opt.inverse, "similarity: use P⁻¹");
    transform->add_flag("--entrywise", opt.entrywise, "hadamard: plain entrywise product, no support checks");
    transform->add_option("--map", opt.map, "gmap: steps such as conj,pow:2");
    transform->add_option("--ideal", opt.ideal, "i-retract: socle | left:K | right:K | strong:K | members:a,b");
    transform->add_option("--tol", opt.tol);
    transform->add_option("-o,--out", opt.out, "output file (default: standard output)");

    auto* example = app.add_subcommand("example", "reproduce the worked example matrices");
    example->add_option("name", which, "example name or all");
    example->add_option("--out-dir", dir, "write each matrix as <name>.json");
    example->add_option("--tol", opt.tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*build) return cmd_build(kind, what);
        if (*verify) return cmd_verify(path);
        if (*analyze) return cmd_analyze(what, path);
        if (*transform) {
            if (!p_text.empty()) {
                if (what == "similarity") opt.pmat = p_text;
                else opt.p = parse_ints(p_text).at(0);
            }
            return cmd_transform(what, inputs);
        }
        if (*example) return cmd_example(which, dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

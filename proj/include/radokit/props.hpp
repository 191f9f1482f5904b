#pragma once

// Seeded randomized property suite over every module. Each trial draws its
// instance from a generator seeded by (seed, property, trial), so a failing
// record names everything needed to rerun it alone.

#include "radokit/replay.hpp"

#include <random>

namespace radokit {

using Rng = std::mt19937_64;

namespace props {

inline i64 uniform(Rng& rng, i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); }

inline LinearEquation random_equation(Rng& rng, std::size_t k_lo, std::size_t k_hi, i64 max_abs)
{
    auto k = static_cast<std::size_t>(uniform(rng, static_cast<i64>(k_lo), static_cast<i64>(k_hi)));
    std::vector<i64> c;
    for (std::size_t i = 0; i < k; ++i) {
        i64 v = uniform(rng, 1, max_abs);
        c.push_back(uniform(rng, 0, 1) ? v : -v);
    }
    return LinearEquation(std::move(c));
}

inline Coloring random_coloring(Rng& rng, Window w, int r)
{
    return Coloring::from_function(w, r, [&](i64) { return static_cast<Color>(uniform(rng, 1, r)); });
}

inline IntSet random_set(Rng& rng, Window w, double density)
{
    std::bernoulli_distribution coin(density);
    return IntSet::from_predicate(w, [&](i64) { return coin(rng); });
}

inline bool brute_rado(const LinearEquation& eq)
{
    const auto& c = eq.coeffs();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c.size()); ++mask) {
        i64 s = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (mask >> i & 1U)
                s += c[i];
        if (s == 0)
            return true;
    }
    return false;
}

/// Any monochromatic solution, by plain nested loops (k <= 3).
inline bool brute_has_mono(const LinearEquation& eq, const Coloring& col)
{
    const auto& w = col.window();
    const auto& c = eq.coeffs();
    if (c.size() == 1)
        return false;
    if (c.size() == 2) {
        for (i64 x = w.lo; x <= w.hi; ++x)
            for (i64 y = w.lo; y <= w.hi; ++y)
                if (c[0] * x + c[1] * y == 0 && col.color_of(x) == col.color_of(y))
                    return true;
        return false;
    }
    if (c.size() != 3)
        throw precondition_error("brute_has_mono handles k <= 3");
    for (i64 x = w.lo; x <= w.hi; ++x)
        for (i64 y = w.lo; y <= w.hi; ++y)
            for (i64 z = w.lo; z <= w.hi; ++z)
                if (c[0] * x + c[1] * y + c[2] * z == 0 && col.color_of(x) == col.color_of(y) &&
                    col.color_of(y) == col.color_of(z))
                    return true;
    return false;
}

/// Existence of an avoiding r-coloring of [1,n] by enumerating all r^n colorings.
inline bool brute_has_avoider(const LinearEquation& eq, int r, i64 n, bool distinct)
{
    std::vector<Color> colors(static_cast<std::size_t>(n), 1);
    while (true) {
        Coloring col(Window{1, n}, r, colors);
        if (!first_mono_solution(eq, col, distinct))
            return true;
        std::size_t i = 0;
        while (i < colors.size() && colors[i] == r)
            colors[i++] = 1;
        if (i == colors.size())
            return false;
        ++colors[i];
    }
}

using Check = std::function<std::string(Rng&, Record&)>;

struct Property {
    std::string name;
    Check check;
};

inline std::vector<Property> all_properties()
{
    std::vector<Property> ps;

    ps.push_back({"rational-roundtrip", [](Rng& rng, Record& inst) {
                      Rational q(uniform(rng, -1000, 1000), uniform(rng, 1, 1000));
                      inst.add("q", q.to_string());
                      return Rational::parse(q.to_string()) == q ? "" : std::string("parse(to_string) differs");
                  }});

    ps.push_back({"record-roundtrip", [](Rng& rng, Record& inst) {
                      static const std::string alphabet = "ab=\" \\,{}x-1";
                      Record rec;
                      auto fields = uniform(rng, 1, 5);
                      for (i64 f = 0; f < fields; ++f) {
                          std::string v;
                          auto len = uniform(rng, 0, 8);
                          for (i64 i = 0; i < len; ++i)
                              v += alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<i64>(alphabet.size()) - 1))];
                          rec.add("k" + std::to_string(f), v);
                      }
                      inst.add("line", rec.to_line());
                      return Record::parse(rec.to_line()) == rec ? "" : std::string("parse(to_line) differs");
                  }});

    ps.push_back({"equation-roundtrip", [](Rng& rng, Record& inst) {
                      auto eq = random_equation(rng, 1, 8, 50);
                      inst.add("eq", eq.to_string());
                      return parse_equation(eq.to_string()) == eq ? "" : std::string("parse(to_string) differs");
                  }});

    ps.push_back({"constant-eval", [](Rng& rng, Record& inst) {
                      auto eq = random_equation(rng, 1, 8, 50);
                      i64 a = uniform(rng, 1, 1000);
                      inst.add("eq", eq.to_string()).add("a", a);
                      std::vector<i64> v(eq.k(), a);
                      return eval(eq, v) == a * eq.coefficient_sum() ? "" : std::string("eval != a*sum");
                  }});

    ps.push_back({"rado-certificate", [](Rng& rng, Record& inst) {
                      auto eq = random_equation(rng, 1, 10, 6);
                      inst.add("eq", eq.to_string());
                      auto sub = rado_condition(eq);
                      if (sub.has_value() != brute_rado(eq))
                          return std::string("presence disagrees with subset enumeration");
                      if (sub && !verify_certificate(eq, *sub))
                          return "subset " + sub->to_string() + " does not verify";
                      return std::string();
                  }});

    ps.push_back({"necessity-free", [](Rng& rng, Record& inst) {
                      LinearEquation eq;
                      do
                          eq = random_equation(rng, 3, 3, 3);
                      while (rado_condition(eq));
                      inst.add("eq", eq.to_string());
                      auto nc = auto_necessity_coloring(eq, Window{1, 40});
                      inst.add("prime", nc.prime);
                      return brute_has_mono(eq, nc.coloring) ? std::string("nested loops found a solution") : "";
                  }});

    ps.push_back({"shift-additivity", [](Rng& rng, Record& inst) {
                      auto a = random_set(rng, Window{1, 200}, 0.2);
                      std::vector<i64> shifts;
                      for (i64 s = 0; s <= 40; ++s)
                          if (uniform(rng, 0, 9) == 0)
                              shifts.push_back(s);
                      Window probe{1, 150};
                      inst.add("shifts", join_ints(shifts));
                      auto sc = shift_union_count(a, shifts, probe);
                      bool disjoint = true;
                      for (i64 y = probe.lo; y <= probe.hi; ++y) {
                          int hits = 0;
                          for (i64 s : shifts)
                              hits += a.contains(y + s) ? 1 : 0;
                          disjoint = disjoint && hits <= 1;
                      }
                      i64 sum = 0;
                      for (i64 c : sc.counts)
                          sum += c;
                      if (disjoint ? sc.union_count != sum : sc.union_count > sum)
                          return "union " + std::to_string(sc.union_count) + " vs sum " + std::to_string(sum);
                      return std::string();
                  }});

    ps.push_back({"delta-intersection", [](Rng& rng, Record& inst) {
                      // |X| > 1/alpha translates of a set with density >= alpha in the probe must overlap
                      i64 inv = uniform(rng, 2, 6);
                      Window probe{1, 120};
                      std::vector<i64> xs;
                      while (static_cast<i64>(xs.size()) < inv + 1) {
                          i64 x = uniform(rng, 1, 60);
                          if (std::find(xs.begin(), xs.end(), x) == xs.end())
                              xs.push_back(x);
                      }
                      std::sort(xs.begin(), xs.end());
                      IntSet a;
                      bool dense = false;
                      while (!dense) {
                          a = random_set(rng, Window{1, 180}, 1.0 / static_cast<double>(inv) + 0.05);
                          auto sc = shift_union_count(a, xs, probe);
                          dense = std::all_of(sc.counts.begin(), sc.counts.end(),
                                              [&](i64 c) { return c * inv >= probe.size(); });
                      }
                      inst.add("inv_alpha", inv).add("x", join_ints(xs));
                      auto hit = delta_intersection(a, IntSet(Window{1, 60}, xs));
                      if (!hit)
                          return std::string("no common difference");
                      auto [a1, a2] = hit->in_a;
                      auto [x1, x2] = hit->in_x;
                      if (!a.contains(a1) || !a.contains(a2) || a2 - a1 != hit->d || x2 - x1 != hit->d)
                          return std::string("witnesses do not verify");
                      return std::string();
                  }});

    ps.push_back({"thick-witness", [](Rng& rng, Record& inst) {
                      auto t = random_set(rng, Window{1, 400}, 0.97);
                      auto xs = thick_delta_sequence(t, 8);
                      inst.add("x", join_ints(xs));
                      if (xs.size() >= 2 && !delta_set(IntSet(Window{1, 400}, xs)).is_subset_of(t))
                          return std::string("a difference leaves T");
                      return std::string();
                  }});

    ps.push_back({"search-vs-enumeration", [](Rng& rng, Record& inst) {
                      auto eq = random_equation(rng, 2, 3, 3);
                      int r = static_cast<int>(uniform(rng, 1, 2));
                      i64 n = uniform(rng, 1, 9);
                      bool distinct = uniform(rng, 0, 3) == 0;
                      inst.add("eq", eq.to_string()).add("r", r).add("n", n).add("distinct", distinct);
                      auto res = has_avoiding_coloring(eq, r, n, distinct);
                      bool found = res.status == SearchStatus::found;
                      if (found != brute_has_avoider(eq, r, n, distinct))
                          return std::string("existence disagrees with enumeration");
                      if (found && !verify_certificate(eq, *res.coloring))
                          return std::string("avoiding coloring does not verify");
                      return std::string();
                  }});

    ps.push_back({"compose-identity", [](Rng& rng, Record& inst) {
                      auto eq = random_equation(rng, 1, 5, 9);
                      Rational q(uniform(rng, 1, 9) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 9));
                      std::vector<i64> v;
                      for (std::size_t i = 0; i <= eq.k(); ++i)
                          v.push_back(uniform(rng, 1, 100));
                      inst.add("eq", eq.to_string()).add("q", q.to_string()).add("n", join_ints(v));
                      auto composed = compose_q(eq, q);
                      Rational lhs(eval(composed, v));
                      Rational rhs(0);
                      for (std::size_t i = 0; i + 1 < eq.k(); ++i)
                          rhs = rhs + Rational(eq.coeffs()[i] * v[i]);
                      rhs = rhs + Rational(eq.coeffs().back()) * (Rational(v[eq.k() - 1]) + q * Rational(v[eq.k()]));
                      Rational den((Rational(eq.coeffs().back()) * q).den());
                      return lhs == den * rhs ? "" : "composed " + lhs.to_string() + " vs " + (den * rhs).to_string();
                  }});

    ps.push_back({"homogeneity-transfer", [](Rng& rng, Record& inst) {
                      LinearEquation eq;
                      do
                          eq = random_equation(rng, 3, 3, 3);
                      while (!rado_condition(eq));
                      auto col = Coloring::from_function(Window{1, 60}, 1, [](i64) { return Color{1}; });
                      auto sols = find_mono_solutions(eq, col, false, 20);
                      i64 y = uniform(rng, 1, 50);
                      inst.add("eq", eq.to_string()).add("y", y);
                      for (const auto& s : sols) {
                          std::vector<i64> scaled;
                          for (i64 v : s.assignment)
                              scaled.push_back(v * y);
                          if (eval(eq, scaled) != 0)
                              return "scaled " + join_ints(scaled) + " is not a solution";
                      }
                      return std::string();
                  }});

    ps.push_back({"finale-soundness", [](Rng& rng, Record& inst) {
                      LinearEquation eq;
                      do
                          eq = random_equation(rng, 2, 4, 3);
                      while (!rado_condition(eq));
                      auto col = random_coloring(rng, Window{1, 300}, static_cast<int>(uniform(rng, 1, 3)));
                      inst.add("eq", eq.to_string()).add("colors", col.num_colors());
                      try {
                          auto res = replay_finale(eq, col);
                          if (auto v = verify_certificate(eq, res.solution, &col); !v)
                              return "finale output does not verify: " + v.diagnostic;
                          if (assignment_from_trace(PipelineTrace::parse(res.trace.to_text())) != res.solution.assignment)
                              return std::string("trace does not reproduce the assignment");
                          if (find_mono_solutions(eq, col, false, 1).empty())
                              return std::string("direct search misses a solution the pipeline found");
                      } catch (const pipeline_error&) {
                          inst.add("pipeline", "failed");
                      }
                      return std::string();
                  }});

    return ps;
}

}  // namespace props

struct PropsReport {
    bool ok = true;
    std::vector<Record> lines;
    std::optional<Record> failure;  // reproduction record of the first failing trial

    std::string to_text() const
    {
        std::string out;
        for (const auto& r : lines)
            out += r.to_line() + '\n';
        return out;
    }
};

/// Runs every property for the given number of trials. With inject_failure the
/// harness self-test property fails on its last trial.
inline PropsReport verify_props(std::uint64_t seed, i64 trials, bool inject_failure = false)
{
    if (trials < 1)
        throw precondition_error("trials must be at least 1");
    auto ps = props::all_properties();
    ps.push_back({"harness-self-test", [&](Rng& rng, Record& inst) {
                      i64 v = props::uniform(rng, 0, 1'000'000);
                      inst.add("v", v);
                      bool last = inst.get("trial") == std::to_string(trials - 1);
                      return inject_failure && last ? std::string("injected failure") : std::string();
                  }});

    PropsReport report;
    report.lines.push_back(Record("suite", "props").add("seed", std::to_string(seed)).add("trials", trials));
    for (std::size_t p = 0; p < ps.size(); ++p) {
        for (i64 t = 0; t < trials; ++t) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(t)};
            Rng rng(seq);
            Record inst("property", ps[p].name);
            inst.add("trial", t);
            std::string why;
            try {
                why = ps[p].check(rng, inst);
            } catch (const std::exception& e) {
                why = std::string("exception: ") + e.what();
            }
            if (!why.empty()) {
                inst.add("status", "fail").add("seed", std::to_string(seed)).add("reason", why);
                report.ok = false;
                report.failure = inst;
                report.lines.push_back(inst);
                return report;
            }
        }
        report.lines.push_back(Record("property", ps[p].name).add("trials", trials).add("status", "pass"));
    }
    report.lines.push_back(Record("summary", "pass").add("properties", ps.size()));
    return report;
}

}  // namespace radokit

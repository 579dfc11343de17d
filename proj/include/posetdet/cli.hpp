#pragma once

// Command-line front end. Exit codes: 0 every check passed, 1 an identity
// failed, 2 invalid input (including a violated hypothesis).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posetdet/chromatic.hpp"
#include "posetdet/det.hpp"
#include "posetdet/errors.hpp"
#include "posetdet/identities.hpp"
#include "posetdet/io.hpp"
#include "posetdet/lgv.hpp"
#include "posetdet/poset.hpp"
#include "posetdet/random.hpp"
#include "posetdet/report.hpp"

namespace posetdet::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalid = 2;

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"main",  "weighted", "lindstrom",   "meet-closed",
                                              "smith", "apostol",  "daniloff",    "stembridge",
                                              "three-layer", "tutte", "definiteness"};
  return names;
}

struct Options {
  std::string identity;
  std::optional<std::uint64_t> n;
  std::optional<unsigned> k;
  std::vector<std::uint64_t> set;
  std::string poset_file;
  std::string digraph_file;
  std::uint64_t seed = 42;
  std::size_t cases = 20;
  std::size_t max_size = 7;
  bool machine = false;
};

/// Collects reports and emits them in case order.
class Sink {
 public:
  Sink(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  void add(const IdentityReport& r) {
    out_ << (machine_ ? r.machine_line() : r.line()) << "\n";
    ++total_;
    if (r.verdict == Verdict::pass) ++passed_;
    if (r.verdict == Verdict::fail) failed_ = true;
    if (r.verdict == Verdict::hypothesis_failed) hypothesis_failed_ = true;
  }

  int exit_code() const {
    if (failed_) return kExitViolation;
    if (hypothesis_failed_) return kExitInvalid;
    return kExitPass;
  }

  std::size_t total() const { return total_; }
  std::size_t passed() const { return passed_; }

 private:
  std::ostream& out_;
  bool machine_;
  std::size_t total_ = 0;
  std::size_t passed_ = 0;
  bool failed_ = false;
  bool hypothesis_failed_ = false;
};

namespace detail {

inline std::string indexed(const std::string& name, std::size_t i) { return name + "#" + std::to_string(i); }

inline IdentityReport renamed(IdentityReport r, std::string name) {
  r.name = std::move(name);
  return r;
}

/// Checks the three-layer digraph of (p, F, G): exactly one nonintersecting
/// family overall, of identity type, and a path-sum matrix equal to (P)_FG.
inline IdentityReport three_layer_report(const Poset& p, const IncidenceFunction& f, const IncidenceFunction& g,
                                         const std::string& name) {
  const WeightedDigraph d = three_layer_digraph(p, f, g);
  IdentityReport r = renamed(verify_stembridge(d), name);
  if (r.verdict != Verdict::pass) return r;
  const auto families = enumerate_nonintersecting(d);
  const bool single = families.size() == 1 && families[0].is_identity();
  if (!single || !(stembridge_matrix(d) == build_pfg(p, f, g)) || !(r.predicted == predicted_det_pfg(p, f, g))) {
    r.verdict = Verdict::fail;
  }
  return r;
}

/// det of a symmetric (P)_FG instance, with the diagonal-sign predicate
/// compared against Sylvester's criterion.
inline IdentityReport definiteness_report(const Poset& p, const IncidenceFunction& f, const IncidenceFunction& g,
                                          const std::string& name) {
  const auto t0 = std::chrono::steady_clock::now();
  const SquareMatrix m = build_pfg(p, f, g);
  IdentityReport r = make_report(name, p.description(), p.size(), det_bareiss(m), predicted_det_pfg(p, f, g), t0);
  const bool predicate = is_positive_definite_pfg(p, f, g);
  if (predicate != positive_definite_by_minors(m)) r.verdict = Verdict::fail;
  if (is_invertible_pfg(p, f, g) != !r.computed.is_zero()) r.verdict = Verdict::fail;
  return r;
}

/// G(c,b) = s(c) F(c,b) with random signs s, so (P)_FG is symmetric.
inline IncidenceFunction signed_copy(Rng& rng, const IncidenceFunction& f) {
  PointFunction signs;
  for (std::size_t i = 0; i < f.size(); ++i) signs.emplace_back(Integer(uniform_int(rng, 0, 3) == 0 ? -1 : 1));
  return scale_rows(f, signs);
}

inline std::vector<std::size_t> indices_of(const std::vector<std::uint64_t>& values,
                                           const std::vector<std::uint64_t>& wanted) {
  std::vector<std::size_t> out;
  for (std::uint64_t w : wanted) {
    auto it = std::find(values.begin(), values.end(), w);
    if (it == values.end()) throw InputError(std::to_string(w) + " is not an element of the lattice");
    out.push_back(static_cast<std::size_t>(it - values.begin()));
  }
  return out;
}

}  // namespace detail

inline void verify_random_main(const Options& o, Sink& sink, bool weighted) {
  Rng rng(o.seed);
  for (auto& c : random_pfg_cases(o.seed, o.cases, o.max_size)) {
    if (weighted) {
      const auto f = random_point_function(rng, c.poset.size());
      const auto g = random_point_function(rng, c.poset.size());
      sink.add(detail::renamed(verify_weighted(c.poset, c.f, f, c.g, g), detail::indexed("weighted", c.index)));
    } else {
      sink.add(detail::renamed(verify_pfg(c.poset, c.f, c.g), detail::indexed("main", c.index)));
    }
  }
}

inline void run_verify(const Options& o, Sink& sink) {
  const std::string& id = o.identity;
  if (id == "main" || id == "weighted") {
    if (o.poset_file.empty()) return verify_random_main(o, sink, id == "weighted");
    const auto pf = load_poset(o.poset_file);
    Rng rng(o.seed);
    const auto big_f = pf.big_f ? *pf.big_f : random_incidence(rng, pf.poset);
    const auto big_g = pf.big_g ? *pf.big_g : random_incidence(rng, pf.poset);
    if (id == "main") return sink.add(verify_pfg(pf.poset, big_f, big_g));
    const auto f = random_point_function(rng, pf.poset.size());
    const auto g = random_point_function(rng, pf.poset.size());
    return sink.add(verify_weighted(pf.poset, big_f, f, big_g, g));
  }
  if (id == "lindstrom") {
    if (!o.set.empty()) {
      const Poset l = divisor_poset(o.set);
      return sink.add(verify_lindstrom(l, smith_function(l, o.set)));
    }
    if (!o.poset_file.empty()) {
      const auto pf = load_poset(o.poset_file);
      Rng rng(o.seed);
      return sink.add(verify_lindstrom(pf.poset, pf.f ? *pf.f : random_incidence(rng, pf.poset)));
    }
    for (auto& c : random_lindstrom_cases(o.seed, o.cases, std::min<std::size_t>(o.max_size, 6))) {
      sink.add(detail::renamed(verify_lindstrom(c.lattice, c.f), detail::indexed("lindstrom", c.index)));
    }
    return;
  }
  if (id == "meet-closed") {
    if (o.n) {
      const auto values = divisors(*o.n);
      const Poset l = divisor_poset(values);
      Subset s = detail::indices_of(values, o.set);
      if (o.set.empty()) {
        s.resize(values.size());
        std::iota(s.begin(), s.end(), std::size_t{0});
      }
      return sink.add(verify_meet_closed(l, s, smith_function(l, values)));
    }
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.cases; ++i) {
      const auto c = random_meet_closed_case(rng);
      sink.add(detail::renamed(verify_meet_closed(c.lattice, c.subset, c.f), detail::indexed("meet-closed", i)));
    }
    return;
  }
  if (id == "smith") {
    if (!o.set.empty()) return sink.add(verify_smith(o.set));
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.cases; ++i) {
      sink.add(detail::renamed(verify_smith(random_factor_closed(rng)), detail::indexed("smith", i)));
    }
    return;
  }
  if (id == "apostol") {
    if (o.n) return sink.add(verify_apostol(*o.n));
    for (std::uint64_t n = 1; n <= 10; ++n) sink.add(verify_apostol(n));
    return;
  }
  if (id == "daniloff") {
    if (o.n) return sink.add(verify_daniloff(*o.n, o.k.value_or(2)));
    for (unsigned k = 1; k <= 3; ++k) {
      for (std::uint64_t n = 1; n <= 10; ++n) sink.add(verify_daniloff(n, k));
    }
    return;
  }
  if (id == "stembridge") {
    if (!o.digraph_file.empty()) return sink.add(verify_stembridge(load_digraph(o.digraph_file)));
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.cases; ++i) {
      sink.add(detail::renamed(verify_stembridge(random_grid_digraph(rng)), detail::indexed("stembridge", i)));
    }
    return;
  }
  if (id == "three-layer") {
    if (!o.poset_file.empty()) {
      const auto pf = load_poset(o.poset_file);
      Rng rng(o.seed);
      const auto big_f = pf.big_f ? *pf.big_f : random_incidence(rng, pf.poset);
      const auto big_g = pf.big_g ? *pf.big_g : random_incidence(rng, pf.poset);
      return sink.add(detail::three_layer_report(pf.poset, big_f, big_g, "three-layer"));
    }
    for (auto& c : random_pfg_cases(o.seed, o.cases, std::min<std::size_t>(o.max_size, 5))) {
      sink.add(detail::three_layer_report(c.poset, c.f, c.g, detail::indexed("three-layer", c.index)));
    }
    return;
  }
  if (id == "tutte") {
    if (o.n) return sink.add(verify_tutte_det(*o.n));
    for (std::size_t n = 2; n <= 4; ++n) sink.add(verify_tutte_det(n));
    return;
  }
  if (id == "definiteness") {
    Rng rng(o.seed);
    if (!o.poset_file.empty()) {
      const auto pf = load_poset(o.poset_file);
      const auto big_f = pf.big_f ? *pf.big_f : random_incidence(rng, pf.poset);
      const auto big_g = pf.big_g ? *pf.big_g : detail::signed_copy(rng, big_f);
      return sink.add(detail::definiteness_report(pf.poset, big_f, big_g, "definiteness"));
    }
    for (auto& c : random_pfg_cases(o.seed, o.cases, o.max_size)) {
      const auto g = detail::signed_copy(rng, c.f);
      sink.add(detail::definiteness_report(c.poset, c.f, g, detail::indexed("definiteness", c.index)));
    }
    return;
  }
  throw InputError("unknown identity '" + id + "'");
}

/// mu(a,b) for every a <= b, rows in linear-extension order.
inline void run_mobius(const std::string& path, std::ostream& out) {
  const auto pf = load_poset(path);
  const Poset& p = pf.poset;
  const auto mu = mobius(p);
  for (std::size_t a : p.linear_extension()) {
    for (std::size_t b : p.linear_extension()) {
      if (p.leq(a, b)) out << "mu(" << p.label(a) << "," << p.label(b) << ") = " << mu(a, b) << "\n";
    }
  }
}

/// Main-identity and Lindstrom checks on seeded random instances.
inline int run_random_suite(const Options& o, std::ostream& out) {
  Sink sink(out, o.machine);
  for (auto& c : random_pfg_cases(o.seed, o.cases, o.max_size)) {
    const std::string tag = " seed=" + std::to_string(o.seed) + " case=" + std::to_string(c.index);
    IdentityReport r = detail::renamed(verify_pfg(c.poset, c.f, c.g), detail::indexed("main", c.index));
    if (!(build_pfg(c.poset, c.f, c.g) == mat_mul(mat_transpose(incidence_matrix(c.f)), incidence_matrix(c.g)))) {
      r.verdict = Verdict::fail;
    }
    sink.add(r);
    if (r.verdict != Verdict::pass) out << "reproduce:" << tag << "\n";
  }
  for (auto& c : random_lindstrom_cases(o.seed + 1, o.cases, std::min<std::size_t>(o.max_size, 6))) {
    IdentityReport r = detail::renamed(verify_lindstrom(c.lattice, c.f), detail::indexed("lindstrom", c.index));
    sink.add(r);
    if (r.verdict != Verdict::pass) {
      out << "reproduce: seed=" << o.seed << " case=" << c.index << " (lindstrom)\n";
    }
  }
  out << "random-suite seed=" << o.seed << " cases=" << o.cases << " max-size=" << o.max_size << ": "
      << sink.passed() << "/" << sink.total() << " pass\n";
  return sink.exit_code();
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact determinant identities for poset matrices"};
  app.require_subcommand(1);
  Options o;
  std::string mobius_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--cases", o.cases, "number of random cases");
    sub->add_option("--max-size", o.max_size, "largest random poset")->check(CLI::PositiveNumber);
    sub->add_flag("--machine", o.machine, "tab-separated output");
  };

  auto* verify = app.add_subcommand("verify", "check one identity family");
  verify->add_option("identity", o.identity, "identity family")->required()->check(CLI::IsMember(identity_names()));
  verify->add_option("--n", o.n, "size parameter");
  verify->add_option("--k", o.k, "root order for daniloff")->check(CLI::PositiveNumber);
  verify->add_option("--set", o.set, "comma-separated positive integers")->delimiter(',');
  verify->add_option("--poset", o.poset_file, "poset JSON file");
  verify->add_option("--digraph", o.digraph_file, "digraph JSON file");
  add_common(verify);

  auto* mob = app.add_subcommand("mobius", "print the Moebius function of a poset");
  mob->add_option("--poset", mobius_path, "poset JSON file")->required();

  auto* suite = app.add_subcommand("random-suite", "randomized campaign for the main and Lindstrom identities");
  add_common(suite);
  o.cases = 20;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  try {
    if (*mob) {
      run_mobius(mobius_path, out);
      return kExitPass;
    }
    if (*suite) return run_random_suite(o, out);
    Sink sink(out, o.machine);
    run_verify(o, sink);
    return sink.exit_code();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace posetdet::cli

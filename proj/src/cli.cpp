#include "qformff/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qformff/format.hpp"
#include "qformff/global.hpp"
#include "qformff/oracle.hpp"
#include "qformff/parse.hpp"

namespace qff::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Verdict { Agree, Mismatch, Inconclusive };

struct Check {
  Verdict verdict = Verdict::Agree;
  std::string reason;

  void mismatch(std::string why) {
    verdict = Verdict::Mismatch;
    reason = std::move(why);
  }
  void inconclusive(std::string why) {
    if (verdict == Verdict::Agree) {
      verdict = Verdict::Inconclusive;
      reason = std::move(why);
    }
  }
};

struct Outcome {
  Outcome() = default;
  Outcome(std::string in, Json res, std::string text)
      : input(std::move(in)), result(std::move(res)), plain(std::move(text)) {}

  std::string input;
  Json result;
  std::string plain;
  Json places = Json::array();
  Json local = Json::array();
  std::optional<Check> check;
};

struct Context {
  const Invocation& inv;
  ConstField field;
  std::uint64_t seed;
  SearchBudget budget;
};

void expect_args(const Invocation& inv, std::size_t n, const char* usage) {
  if (inv.args.size() != n) fail(Errc::ParseError, inv.command + " expects " + usage);
}

Place required_place(const Context& ctx) {
  if (!ctx.inv.place) fail(Errc::ParseError, ctx.inv.command + " needs --place");
  return parse_place(*ctx.inv.place, ctx.field);
}

const char* isotropy_word(bool iso) { return iso ? "isotropic" : "anisotropic"; }

void add_local(Outcome& o, const Place& place, Json value) {
  o.places.push_back(render(place));
  o.local.push_back(Json{{"place", render(place)}, {"value", std::move(value)}});
}

// Local referee at each place, skipping places whose residue search is too large.
void referee_local_isotropy(Check& check, const DiagForm& q, const std::vector<Place>& places) {
  for (const auto& place : places) {
    try {
      if (oracle_local_isotropy(q, place) != local_is_isotropic(q, place)) {
        check.mismatch("local isotropy at " + render(place) + " disagrees with exhaustive search");
        return;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
    }
  }
}

// Global referee: a witness exists iff the form was declared isotropic.
void referee_isotropy(Check& check, const DiagForm& q, bool isotropic, const SearchBudget& budget) {
  try {
    const auto witness = oracle_isotropy_witness(q, budget);
    if (witness && !isotropic) check.mismatch("found an isotropic vector for a form declared anisotropic");
    if (!witness && isotropic) check.inconclusive("no isotropic vector within the degree bound");
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    check.inconclusive("witness search exceeded its budget");
  }
}

// a is a sum of n squares and, if n > 1, not of n - 1.
void referee_length(Check& check, const RatFunc& a, unsigned n, const SearchBudget& budget) {
  try {
    if (!oracle_length_upper(a, n, budget)) check.inconclusive("no representation as a sum of " + std::to_string(n) + " squares within the degree bound");
    if (n > 1 && oracle_length_upper(a, n - 1, budget)) {
      check.mismatch("found a representation as a sum of " + std::to_string(n - 1) + " squares");
    }
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    check.inconclusive("sum-of-squares search exceeded its budget");
  }
}

Outcome cmd_isotropic(const Context& ctx) {
  expect_args(ctx.inv, 1, "one form");
  const DiagForm q = parse_form(ctx.inv.args[0], ctx.field);
  const bool iso = is_isotropic(q, ctx.seed);
  Outcome o{render(q), iso, isotropy_word(iso)};
  const auto places = relevant_places(q, ctx.seed);
  for (const auto& p : places) add_local(o, p, local_is_isotropic(q, p));
  if (ctx.inv.verify) {
    Check c;
    referee_local_isotropy(c, q, places);
    referee_isotropy(c, q, iso, ctx.budget);
    o.check = c;
  }
  return o;
}

Outcome cmd_hyperbolic(const Context& ctx) {
  expect_args(ctx.inv, 1, "one form");
  const DiagForm q = parse_form(ctx.inv.args[0], ctx.field);
  const bool hyp = is_hyperbolic(q, ctx.seed);
  Outcome o{render(q), hyp, hyp ? "hyperbolic" : "not hyperbolic"};
  const auto places = relevant_places(q, ctx.seed);
  for (const auto& p : places) add_local(o, p, local_is_hyperbolic(q, p));
  if (ctx.inv.verify) {
    Check c;
    referee_local_isotropy(c, q, places);
    referee_isotropy(c, q, is_isotropic(q, ctx.seed), ctx.budget);
    o.check = c;
  }
  return o;
}

Outcome cmd_aniso(const Context& ctx, bool witt) {
  expect_args(ctx.inv, 1, "one form");
  const DiagForm q = parse_form(ctx.inv.args[0], ctx.field);
  const WittData w = witt_data(q, ctx.seed);
  const unsigned value = witt ? w.witt_index : w.aniso_dim;
  Outcome o{render(q), value, std::to_string(value)};
  const auto places = relevant_places(q, ctx.seed);
  for (const auto& p : places) add_local(o, p, local_anisotropic_dimension(q, p));
  if (ctx.inv.verify) {
    Check c;
    referee_local_isotropy(c, q, places);
    referee_isotropy(c, q, w.isotropic, ctx.budget);
    o.check = c;
  }
  return o;
}

Outcome cmd_length(const Context& ctx) {
  expect_args(ctx.inv, 1, "one element");
  const RatFunc a = parse_ratfunc(ctx.inv.args[0], ctx.field);
  const unsigned n = length(a, ctx.seed);
  Outcome o{render(a), n, std::to_string(n)};
  for (const auto& [p, v] : support(a, ctx.seed)) add_local(o, p, local_length(a, p));
  if (ctx.inv.verify) {
    Check c;
    referee_length(c, a, n, ctx.budget);
    o.check = c;
  }
  return o;
}

Outcome cmd_field_invariant(const Context& ctx, bool pythagoras) {
  expect_args(ctx.inv, 0, "no arguments");
  const unsigned n = pythagoras ? pythagoras_number(ctx.field) : level(ctx.field);
  Outcome o{"", n, std::to_string(n)};
  if (ctx.inv.verify) {
    // -1 realises the level; x realises the Pythagoras number.
    const FieldPtr& F = ctx.field.field();
    Check c;
    referee_length(c, pythagoras ? RatFunc::x(F) : RatFunc::from_int(F, -1), n, ctx.budget);
    o.check = c;
  }
  return o;
}

Outcome cmd_hilbert(const Context& ctx) {
  expect_args(ctx.inv, 2, "two elements");
  const RatFunc a = parse_ratfunc(ctx.inv.args[0], ctx.field);
  const RatFunc b = parse_ratfunc(ctx.inv.args[1], ctx.field);
  const Place place = required_place(ctx);
  const int s = hilbert_symbol(a, b, place);
  Outcome o{render(a) + ", " + render(b), s, std::to_string(s)};
  add_local(o, place, s);
  if (ctx.inv.verify) {
    Check c;
    const DiagForm q({RatFunc::from_int(ctx.field.field(), 1), -a, -b});
    try {
      if (oracle_local_isotropy(q, place) != (s == 1)) c.mismatch("<1, -a, -b> isotropy disagrees with the symbol");
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      c.inconclusive("residue field too large for exhaustive search");
    }
    o.check = c;
  }
  return o;
}

Outcome cmd_local(const Context& ctx, bool aniso) {
  expect_args(ctx.inv, 1, "one form");
  const DiagForm q = parse_form(ctx.inv.args[0], ctx.field);
  const Place place = required_place(ctx);
  Outcome o;
  o.input = render(q);
  bool iso = false;
  if (aniso) {
    const unsigned d = local_anisotropic_dimension(q, place);
    iso = d < q.dim();
    o.result = d;
    o.plain = std::to_string(d);
    add_local(o, place, d);
  } else {
    iso = local_is_isotropic(q, place);
    o.result = iso;
    o.plain = isotropy_word(iso);
    add_local(o, place, iso);
  }
  if (ctx.inv.verify) {
    Check c;
    try {
      if (oracle_local_isotropy(q, place) != iso) c.mismatch("exhaustive residue search disagrees");
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      c.inconclusive("residue field too large for exhaustive search");
    }
    o.check = c;
  }
  return o;
}

Outcome cmd_square(const Context& ctx) {
  expect_args(ctx.inv, 1, "one element");
  const RatFunc a = parse_ratfunc(ctx.inv.args[0], ctx.field);
  if (a.is_zero()) fail(Errc::ZeroElement, "square test of zero");
  const bool sq = is_global_square(a);
  Outcome o{render(a), sq, sq ? "square" : "not square"};
  for (const auto& [p, v] : support(a, ctx.seed)) add_local(o, p, local_square_class(a, p).is_trivial());
  if (ctx.inv.verify) {
    Check c;
    if (oracle_length_upper(a, 1, ctx.budget).has_value() != sq) c.mismatch("square root search disagrees");
    o.check = c;
  }
  return o;
}

Outcome cmd_factor(const Context& ctx) {
  expect_args(ctx.inv, 1, "one polynomial");
  const Poly f = parse_poly(ctx.inv.args[0], ctx.field);
  const Factorization fac = factor(f, ctx.seed);
  const std::string text = render(fac);
  Outcome o{render(f), text, text};
  for (const auto& [g, m] : fac.factors) add_local(o, Place::finite(g), m);
  if (ctx.inv.verify) {
    Check c;
    if (!(fac.expand() == f)) c.mismatch("factors do not multiply back to the input");
    for (const auto& [g, m] : fac.factors) {
      if (!is_irreducible(g)) c.mismatch("factor " + render(g) + " is reducible");
    }
    o.check = c;
  }
  return o;
}

Outcome cmd_verify(const Context& ctx) {
  expect_args(ctx.inv, 1, "one form");
  const DiagForm q = parse_form(ctx.inv.args[0], ctx.field);
  const WittData w = witt_data(q, ctx.seed);
  std::ostringstream summary;
  summary << "dim " << w.dim << ", aniso-dim " << w.aniso_dim << ", witt-index " << w.witt_index << ", "
          << isotropy_word(w.isotropic) << ", " << (w.hyperbolic ? "hyperbolic" : "not hyperbolic");
  Outcome o{render(q), summary.str(), summary.str()};
  const auto places = relevant_places(q, ctx.seed);
  for (const auto& p : places) add_local(o, p, local_anisotropic_dimension(q, p));
  Check c;
  for (const auto& p : places) local_is_hyperbolic(q, p);
  referee_local_isotropy(c, q, places);
  referee_isotropy(c, q, w.isotropic, ctx.budget);
  o.check = c;
  return o;
}

Outcome dispatch(const Context& ctx) {
  const std::string& cmd = ctx.inv.command;
  if (cmd == "isotropic") return cmd_isotropic(ctx);
  if (cmd == "hyperbolic") return cmd_hyperbolic(ctx);
  if (cmd == "aniso-dim") return cmd_aniso(ctx, false);
  if (cmd == "witt-index") return cmd_aniso(ctx, true);
  if (cmd == "length") return cmd_length(ctx);
  if (cmd == "level") return cmd_field_invariant(ctx, false);
  if (cmd == "pythagoras") return cmd_field_invariant(ctx, true);
  if (cmd == "hilbert") return cmd_hilbert(ctx);
  if (cmd == "local-isotropic") return cmd_local(ctx, false);
  if (cmd == "local-aniso-dim") return cmd_local(ctx, true);
  if (cmd == "square") return cmd_square(ctx);
  if (cmd == "factor") return cmd_factor(ctx);
  if (cmd == "verify") return cmd_verify(ctx);
  fail(Errc::ParseError, "unknown command '" + cmd + "'");
}

Json field_json(const ConstField& F) {
  Json j{{"p", F.p()}, {"k", F.k()}};
  if (F.k() > 1) j["modulus"] = render_modulus(F);
  return j;
}

}  // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    const ConstField field = parse_field(inv.field_spec);
    SearchBudget budget;
    if (inv.seed) budget.seed = *inv.seed;
    if (inv.budget_degree) budget.max_entry_degree = *inv.budget_degree;
    const Context ctx{inv, field, inv.seed.value_or(kDefaultSeed), budget};
    const Outcome o = dispatch(ctx);
    const bool verified = !o.check || o.check->verdict == Verdict::Agree;
    if (inv.json) {
      Json j{{"command", inv.command},
             {"field", field_json(field)},
             {"input", o.input},
             {"result", o.result},
             {"details", Json{{"places", o.places}, {"local", o.local}}}};
      if (o.check) j["verified"] = verified;
      out << j.dump() << '\n';
    } else {
      out << o.plain << '\n';
      if (o.check) out << (verified ? "verified" : "not verified") << '\n';
    }
    if (!verified) {
      const bool inconclusive = o.check->verdict == Verdict::Inconclusive;
      err << "qformff: verification " << (inconclusive ? "inconclusive: " : "failed: ") << o.check->reason << '\n';
      return kVerificationFailed;
    }
    return kOk;
  } catch (const Error& e) {
    err << "qformff: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == Errc::InvariantViolation ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    err << "qformff: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic forms over F_q(x)", "qformff"};
  Invocation inv;
  app.add_option("--field", inv.field_spec, "Constant field, e.g. GF(3) or GF(9, t^2+1)")->required();
  app.add_flag("--json", inv.json, "Print one JSON object");
  app.add_option("--seed", inv.seed, "Seed for randomized factorization")->envname("QFORMFF_SEED");
  app.add_option("--place", inv.place, "Place for local commands: inf or a monic irreducible polynomial");
  app.add_flag("--verify", inv.verify, "Cross-check the result with brute-force search");
  app.add_option("--budget-degree", inv.budget_degree, "Entry degree bound for --verify searches");
  app.add_option("command", inv.command,
                 "isotropic | hyperbolic | aniso-dim | witt-index | length | level | pythagoras | hilbert | "
                 "local-isotropic | local-aniso-dim | square | factor | verify")
      ->required();
  app.add_option("args", inv.args, "Command arguments (forms are comma-separated coefficients)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qformff: " << e.what() << '\n';
    return kInputError;
  }
  return run(inv, out, err);
}

}  // namespace qff::cli

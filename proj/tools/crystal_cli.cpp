// Command-line front end: generate crystal graphs from any of the four
// realizations, verify the isomorphism and equivalence statements at chosen
// sizes, convert elements between realizations, and test membership.
//
// Exit codes: 0 success / verified / member; 1 counterexample, non-member,
// or conversion of a non-member; 2 invalid configuration or unparsable
// input. All diagnostics go to standard error.

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crystal/crystal.hpp"

namespace {

using namespace crystal;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Weight parse_weight(const std::string& text, int n) {
  std::vector<Int> coeffs;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) throw ConfigError("empty weight coefficient in '" + text + "'");
      coeffs.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (static_cast<int>(coeffs.size()) != n)
    throw ConfigError("weight '" + text + "' must list exactly " + std::to_string(n) + " coefficients");
  return Weight(std::move(coeffs));
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) throw ConfigError("empty entry in list '" + text + "'");
      out.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

std::shared_ptr<const CMatrix> parse_cmatrix(const std::string& spec, int n) {
  Rank r(n);
  if (spec.empty() || spec == "default") return std::make_shared<CMatrix>(CMatrix::standard(r));
  size_t want = static_cast<size_t>(n) * (n - 1) / 2;
  if (spec.size() != want) throw ConfigError("c-matrix bit string must have length " + std::to_string(want));
  std::vector<Int> upper;
  for (char ch : spec) {
    if (ch != '0' && ch != '1') throw ConfigError("c-matrix spec must be 'default' or a 0/1 string");
    upper.push_back(ch - '0');
  }
  return std::make_shared<CMatrix>(r, std::move(upper));
}

Weight lambda_from_shape(const Tableau& t) {
  Weight lambda = zero_weight(Rank(t.n));
  for (int i = 1; i <= t.n; ++i)
    lambda.coeffs[static_cast<size_t>(i) - 1] = checked_sub(row_length(t, i), row_length(t, i + 1));
  return lambda;
}

Json read_stdin_json() {
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return Json::parse(text);
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string model;
  int n = 0;
  std::string lambda_text;
  std::string p_text;
  Int r = 0;
  std::string c_spec;
  std::optional<int> depth;
  std::string format = "text";
};

int run_generate(const GenerateArgs& args) {
  Rank rank(args.n);
  bool is_binf = args.model == "monomial-binf" || args.model == "tableau-binf";
  bool is_tableau = args.model == "tableau-binf" || args.model == "tableau-bla";
  if (is_binf && !args.depth) throw ConfigError("model " + args.model + " is infinite: --depth is required");
  if (!is_binf && args.lambda_text.empty()) throw ConfigError("model " + args.model + " requires --lambda");
  if (is_tableau && !args.c_spec.empty())
    throw ConfigError("--c selects a monomial crystal structure; it does not apply to tableau models");
  if (!args.p_text.empty() && args.model != "monomial-binf")
    throw ConfigError("--p applies to monomial-binf only");

  CrystalGraph g;
  if (args.model == "monomial-bla") {
    Weight lambda = parse_weight(args.lambda_text, args.n);
    if (!lambda.dominant()) throw ConfigError("--lambda must be dominant");
    g = bfs_generate(MonomialBlaElem{m_lambda(lambda, args.r), parse_cmatrix(args.c_spec, args.n)}, args.depth);
  } else if (args.model == "tableau-bla") {
    Weight lambda = parse_weight(args.lambda_text, args.n);
    if (!lambda.dominant()) throw ConfigError("--lambda must be dominant");
    if (args.r != 0) throw ConfigError("--r applies to monomial models only");
    g = bfs_generate(TableauBlaElem{highest_weight_tableau(rank, lambda)}, args.depth);
  } else if (args.model == "monomial-binf") {
    std::vector<Int> p;
    if (!args.p_text.empty()) p = parse_int_list(args.p_text);
    g = bfs_generate(MonomialInfElem{m_infinity(rank, p, args.r), parse_cmatrix(args.c_spec, args.n)},
                     args.depth);
  } else if (args.model == "tableau-binf") {
    if (args.r != 0) throw ConfigError("--r applies to monomial models only");
    g = bfs_generate(TableauInfElem{t_infinity(rank)}, args.depth);
  } else {
    throw ConfigError("unknown model '" + args.model + "'");
  }

  if (args.format == "json")
    std::cout << export_json(g);
  else if (args.format == "dot")
    std::cout << export_dot(g);
  else if (args.format == "text")
    std::cout << export_text(g);
  else
    throw ConfigError("unknown format '" + args.format + "'");
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string kind;
  int n = 0;
  std::string lambda_text;
  std::optional<int> depth;
  std::string mu_text;
  std::string tau_text;
  Int r = 0;
};

struct VerifyReport {
  long checked = 0;

  void require(bool ok, const std::string& what) {
    ++checked;
    if (!ok) throw CheckFailure(what);
  }
};

void verify_iso_bla(const VerifyArgs& args, VerifyReport& rep) {
  Rank rank(args.n);
  if (args.lambda_text.empty()) throw ConfigError("verify iso-bla requires --lambda");
  Weight lambda = parse_weight(args.lambda_text, args.n);
  auto gt = bfs_generate(TableauBlaElem{highest_weight_tableau(rank, lambda)});
  auto gm = bfs_generate(make_mla_element(lambda, args.r));
  rep.require(graphs_isomorphic(gt, gm), "tableau and monomial graphs are not isomorphic");
  rep.require(static_cast<Int>(gt.vertices.size()) == dimension_oracle(rank, lambda),
              "vertex count differs from the tableau-count oracle");
  std::vector<Tableau> all{highest_weight_tableau(rank, lambda)};
  for (size_t at = 0; at < all.size(); ++at) {
    for (int i = 1; i <= args.n; ++i) {
      auto ft = f_bla(all[at], i);
      auto fx = f_sig(Psi(all[at], lambda), i);
      rep.require(ft.has_value() == fx.has_value(),
                  "lowering defined on one side only at " + serialize(all[at]));
      if (ft) {
        rep.require(Psi(*ft, lambda) == *fx, "Psi does not commute with lowering at " + serialize(all[at]));
        if (std::find(all.begin(), all.end(), *ft) == all.end()) all.push_back(*ft);
      }
      auto et = e_bla(all[at], i);
      auto ex = e_sig(Psi(all[at], lambda), i);
      rep.require(et.has_value() == ex.has_value(),
                  "raising defined on one side only at " + serialize(all[at]));
      if (et) rep.require(Psi(*et, lambda) == *ex, "Psi does not commute with raising at " + serialize(all[at]));
    }
  }
  std::cout << "tableau/monomial graphs isomorphic, " << gt.vertices.size()
            << " vertices, operators commute through the bijection\n";
}

void verify_iso_binf(const VerifyArgs& args, VerifyReport& rep) {
  Rank rank(args.n);
  if (!args.depth) throw ConfigError("verify iso-binf requires --depth");
  int depth = *args.depth;
  auto gt = bfs_generate(TableauInfElem{t_infinity(rank)}, depth);
  auto gm = bfs_generate(make_minf_element(rank), depth);
  rep.require(graphs_isomorphic(gt, gm), "tableau and monomial truncations are not isomorphic");
  rep.require(gt.vertices.size() == gm.vertices.size(), "vertex counts differ");

  std::vector<Tableau> all{t_infinity(rank)};
  std::set<std::string> image;
  for (size_t at = 0; at < all.size(); ++at) {
    image.insert(canonical_serialize(from_xform(Phi(all[at]))));
    bool expand = root_height(rank, zero_weight(rank) - wt_tinf(all[at])).value() < depth;
    for (int i = 1; i <= args.n; ++i) {
      if (expand) {
        Tableau child = *f_tinf(all[at], i);
        rep.require(Phi(child) == f_sig(Phi(all[at]), i),
                    "Phi does not commute with lowering at " + serialize(all[at]));
        if (std::find(all.begin(), all.end(), child) == all.end()) all.push_back(std::move(child));
      }
      auto up = e_tinf(all[at], i);
      auto xup = e_sig(Phi(all[at]), i);
      rep.require(up.has_value() == xup.has_value(),
                  "raising defined on one side only at " + serialize(all[at]));
      if (up) rep.require(Phi(*up) == *xup, "Phi does not commute with raising at " + serialize(all[at]));
    }
  }
  std::set<std::string> monomials;
  for (const auto& v : gm.vertices) monomials.insert(v.key);
  rep.require(image == monomials, "Phi is not a bijection between the truncations");
  std::cout << "depth-" << depth << " truncations isomorphic with " << gt.vertices.size()
            << " vertices; Phi commutes with the operators\n";
}

void verify_op_equiv(const VerifyArgs& args, VerifyReport& rep) {
  Rank rank(args.n);
  CMatrix c = CMatrix::standard(rank);
  long elements = 0;
  if (!args.lambda_text.empty()) {
    Weight lambda = parse_weight(args.lambda_text, args.n);
    for (const auto& M : generate_mla_set(rank, lambda, args.r)) {
      ++elements;
      auto x = to_xform(M, lambda, args.r);
      for (int i = 1; i <= args.n; ++i) {
        auto fx = f_sig_step(x, i);
        auto fg = f_tilde(M, i, c);
        rep.require(fx.has_value() == fg.has_value(), "lowering disagrees at " + canonical_serialize(M));
        if (fx) {
          rep.require(from_xform(fx->result) == *fg, "lowering images differ at " + canonical_serialize(M));
          rep.require(fx->position == m_f(M, i),
                      "selected position differs from m_f at " + canonical_serialize(M));
        }
        auto ex = e_sig_step(x, i);
        auto eg = e_tilde(M, i, c);
        rep.require(ex.has_value() == eg.has_value(), "raising disagrees at " + canonical_serialize(M));
        if (ex) {
          rep.require(from_xform(ex->result) == *eg, "raising images differ at " + canonical_serialize(M));
          rep.require(ex->position == m_e(M, i),
                      "selected position differs from m_e at " + canonical_serialize(M));
        }
      }
    }
  }
  if (args.depth) {
    std::vector<ExtMonomial> all{m_infinity(rank)};
    for (size_t at = 0; at < all.size(); ++at) {
      ++elements;
      auto x = to_xform(all[at]);
      bool expand = root_height(rank, weight(m_infinity(rank)) - weight(all[at])).value() < *args.depth;
      for (int i = 1; i <= args.n; ++i) {
        auto [fx, fpos] = f_sig_step(x, i);
        auto fg = f_tilde(all[at], i, c);
        rep.require(fg.has_value() && from_xform(fx) == *fg,
                    "lowering images differ at " + canonical_serialize(all[at]));
        rep.require(fpos == m_f(all[at], i),
                    "selected position differs from m_f at " + canonical_serialize(all[at]));
        auto ex = e_sig_step(x, i);
        auto eg = e_tilde(all[at], i, c);
        rep.require(ex.has_value() == eg.has_value(), "raising disagrees at " + canonical_serialize(all[at]));
        if (ex)
          rep.require(from_xform(ex->result) == *eg,
                      "raising images differ at " + canonical_serialize(all[at]));
        if (expand && std::find(all.begin(), all.end(), *fg) == all.end()) all.push_back(std::move(*fg));
      }
    }
  }
  if (elements == 0) throw ConfigError("verify op-equiv requires --lambda and/or --depth");
  std::cout << "signature-rule operators match the generic operators on " << elements << " elements\n";
}

void verify_closure(const VerifyArgs& args, VerifyReport& rep) {
  Rank rank(args.n);
  CMatrix c = CMatrix::standard(rank);
  long elements = 0;
  if (!args.lambda_text.empty()) {
    Weight lambda = parse_weight(args.lambda_text, args.n);
    auto set = generate_mla_set(rank, lambda, args.r);
    for (const auto& M : set) {
      ++elements;
      rep.require(is_member_bla(M, lambda, args.r),
                  "generated element outside the set: " + canonical_serialize(M));
      for (int i = 1; i <= args.n; ++i) {
        auto f = f_tilde(M, i, c);
        if (f) rep.require(is_member_bla(*f, lambda, args.r), "lowering left the set at " + canonical_serialize(M));
        auto e = e_tilde(M, i, c);
        if (e) rep.require(is_member_bla(*e, lambda, args.r), "raising left the set at " + canonical_serialize(M));
      }
    }
    auto enumerated = enumerate_members_bla(rank, lambda, args.r);
    rep.require(enumerated.size() == set.size() && std::equal(enumerated.begin(), enumerated.end(), set.begin()),
                "condition-defined set differs from the generated set");
  }
  if (args.depth) {
    std::vector<Int> p;
    if (!args.mu_text.empty()) p = parse_int_list(args.mu_text);  // --mu doubles as the p list here
    auto seed = m_infinity(rank, p, args.r);
    std::vector<ExtMonomial> all{seed};
    std::set<std::string> keys{canonical_serialize(seed)};
    for (size_t at = 0; at < all.size(); ++at) {
      ++elements;
      rep.require(is_member_binf(all[at], p, args.r),
                  "generated element outside the set: " + canonical_serialize(all[at]));
      bool expand = root_height(rank, weight(seed) - weight(all[at])).value() < *args.depth;
      for (int i = 1; i <= args.n; ++i) {
        auto f = f_tilde(all[at], i, c);
        rep.require(f.has_value(), "lowering vanished inside the infinite model");
        rep.require(is_member_binf(*f, p, args.r), "lowering left the set at " + canonical_serialize(all[at]));
        auto e = e_tilde(all[at], i, c);
        if (e) rep.require(is_member_binf(*e, p, args.r), "raising left the set at " + canonical_serialize(all[at]));
        if (expand && keys.insert(canonical_serialize(*f)).second) all.push_back(std::move(*f));
      }
    }
    auto enumerated = enumerate_members_binf(rank, *args.depth, p, args.r);
    rep.require(enumerated.size() == keys.size(), "condition-defined set differs from the generated set");
    for (const auto& M : enumerated)
      rep.require(keys.count(canonical_serialize(M)) == 1, "enumerated member missing from the generated set");
  }
  if (elements == 0) throw ConfigError("verify closure requires --lambda and/or --depth");
  std::cout << "membership closed under both operators across " << elements << " elements\n";
}

void verify_c_indep(const VerifyArgs& args, VerifyReport& rep) {
  Rank rank(args.n);
  if (args.lambda_text.empty()) throw ConfigError("verify c-indep requires --lambda");
  Weight lambda = parse_weight(args.lambda_text, args.n);
  size_t entries = static_cast<size_t>(args.n) * (args.n - 1) / 2;
  auto base = bfs_generate(make_mla_element(lambda), args.depth);
  std::vector<std::vector<Int>> alternates{std::vector<Int>(entries, 0)};
  std::vector<Int> skew(entries);
  for (size_t k = 0; k < entries; ++k) skew[k] = (k % 2 == 0) ? 2 : -1;
  alternates.push_back(skew);
  for (const auto& upper : alternates) {
    auto c = std::make_shared<CMatrix>(rank, upper);
    auto g = bfs_generate(MonomialBlaElem{m_lambda(lambda), c}, args.depth);
    rep.require(graphs_isomorphic(base, g), "crystal depends on the c-matrix choice");
  }
  std::cout << "three c-matrix choices give isomorphic crystals on " << base.vertices.size() << " vertices\n";
}

void verify_product(const VerifyArgs& args, VerifyReport& rep) {
  Rank rank(args.n);
  if (args.mu_text.empty() || args.tau_text.empty()) throw ConfigError("verify product requires --mu and --tau");
  Weight mu = parse_weight(args.mu_text, args.n);
  Weight tau = parse_weight(args.tau_text, args.n);
  rep.require(product_set_equal(rank, mu, tau, args.r), "product set differs from the sum set");
  std::cout << "set of products equals the crystal of the sum weight\n";
}

int run_verify(const VerifyArgs& args) {
  VerifyReport rep;
  bool ok = true;
  std::string failure;
  try {
    if (args.kind == "iso-bla")
      verify_iso_bla(args, rep);
    else if (args.kind == "iso-binf")
      verify_iso_binf(args, rep);
    else if (args.kind == "op-equiv")
      verify_op_equiv(args, rep);
    else if (args.kind == "closure")
      verify_closure(args, rep);
    else if (args.kind == "c-indep")
      verify_c_indep(args, rep);
    else if (args.kind == "product")
      verify_product(args, rep);
    else
      throw ConfigError("unknown verify kind '" + args.kind + "'");
  } catch (const CheckFailure& failed) {
    ok = false;
    failure = failed.what();
  }
  if (!ok) std::cout << "counterexample: " << failure << "\n";
  std::cout << Json{{"ok", ok}, {"checked", rep.checked}}.dump() << "\n";
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// convert

struct ConvertArgs {
  std::string family;
  std::string from;
  std::string to;
  std::string lambda_text;
  std::string p_text;
  std::optional<Int> r;
};

int run_convert(const ConvertArgs& args) {
  for (const auto& realization : {args.from, args.to})
    if (realization != "monomial" && realization != "xform" && realization != "tableau")
      throw ConfigError("realizations are monomial, xform, tableau; got '" + realization + "'");

  Json input = read_stdin_json();
  try {
    if (args.family == "binf") {
      XFormInf x;
      if (args.from == "monomial") {
        ExtMonomial M = ext_monomial_from_json(input);
        auto [p, r] = infer_family(M);
        x = to_xform(M, p, r);
      } else if (args.from == "xform") {
        x = xform_inf_from_json(input);
        auto report = check_member_binf(from_xform(x), x.p, x.r);
        if (!report.ok) throw std::invalid_argument(report.reason);
      } else {
        Tableau t = tableau_from_json(input);
        if (!validate(t) || !is_marginally_large(t))
          throw std::invalid_argument("input is not a marginally large tableau");
        x = Phi(t);
        if (!args.p_text.empty() || args.r)
          x = phi_shift(x, args.p_text.empty() ? x.p : parse_int_list(args.p_text), args.r.value_or(0));
      }
      if (args.to == "monomial")
        std::cout << monomial_to_json(from_xform(x)).dump() << "\n";
      else if (args.to == "xform")
        std::cout << xform_to_json(x).dump() << "\n";
      else
        std::cout << tableau_to_json(Phi_inverse(x)).dump() << "\n";
    } else if (args.family == "bla") {
      XFormLa x;
      Int r = args.r.value_or(0);
      if (args.from == "monomial") {
        PlainMonomial M = plain_monomial_from_json(input);
        Weight lambda = args.lambda_text.empty() ? infer_lambda(M, r) : parse_weight(args.lambda_text, M.rank());
        x = to_xform(M, lambda, r);
      } else if (args.from == "xform") {
        x = xform_la_from_json(input);
        auto report = check_xform_la(x);
        if (!report.ok) throw std::invalid_argument(report.reason);
      } else {
        Tableau t = tableau_from_json(input);
        Weight lambda = args.lambda_text.empty() ? lambda_from_shape(t) : parse_weight(args.lambda_text, t.n);
        x = Psi(t, lambda);
        x.r = r;
      }
      if (args.to == "monomial")
        std::cout << monomial_to_json(from_xform(x)).dump() << "\n";
      else if (args.to == "xform")
        std::cout << xform_to_json(x).dump() << "\n";
      else
        std::cout << tableau_to_json(Psi_inverse(x)).dump() << "\n";
    } else {
      throw ConfigError("family must be binf or bla");
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << "not convertible: " << err.what() << "\n";
    return 1;
  } catch (const std::logic_error& err) {
    std::cerr << "not convertible: " << err.what() << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// member

struct MemberArgs {
  std::string model;
  int n = 0;
  std::string lambda_text;
  std::string p_text;
  Int r = 0;
};

int run_member(const MemberArgs& args) {
  Json input = read_stdin_json();
  MemberReport report;
  if (args.model == "monomial-bla") {
    PlainMonomial M = plain_monomial_from_json(input);
    if (M.rank() != args.n) throw ConfigError("monomial rank differs from -n");
    if (args.lambda_text.empty()) throw ConfigError("member monomial-bla requires --lambda");
    report = check_member_bla(M, parse_weight(args.lambda_text, args.n), args.r);
  } else if (args.model == "monomial-binf") {
    ExtMonomial M = ext_monomial_from_json(input);
    if (M.rank() != args.n) throw ConfigError("monomial rank differs from -n");
    std::vector<Int> p;
    if (!args.p_text.empty()) p = parse_int_list(args.p_text);
    report = check_member_binf(M, p, args.r);
  } else if (args.model == "tableau-bla") {
    Tableau t = tableau_from_json(input);
    if (t.n != args.n) throw ConfigError("tableau rank differs from -n");
    if (args.lambda_text.empty()) throw ConfigError("member tableau-bla requires --lambda");
    if (!validate(t, parse_weight(args.lambda_text, args.n)))
      report = {false, "not a semistandard tableau of the given shape"};
  } else if (args.model == "tableau-binf") {
    Tableau t = tableau_from_json(input);
    if (t.n != args.n) throw ConfigError("tableau rank differs from -n");
    if (!validate(t))
      report = {false, "not a semistandard tableau"};
    else if (!is_marginally_large(t))
      report = {false, "not marginally large"};
  } else {
    throw ConfigError("unknown model '" + args.model + "'");
  }
  if (!report.ok) {
    std::cerr << "not a member: " << report.reason << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact crystal graphs for the special linear Lie algebras"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "generate a crystal graph from a canonical seed");
  generate->add_option("--model", gen.model, "monomial-binf | monomial-bla | tableau-binf | tableau-bla")
      ->required();
  generate->add_option("-n", gen.n, "rank")->required()->check(CLI::PositiveNumber);
  generate->add_option("--lambda", gen.lambda_text, "highest weight, comma separated");
  generate->add_option("--p", gen.p_text, "family exponents, comma separated");
  generate->add_option("--r", gen.r, "family shift");
  generate->add_option("--c", gen.c_spec, "'default' or upper-triangle 0/1 string");
  int gen_depth = -1;
  auto* gen_depth_opt = generate->add_option("--depth", gen_depth, "truncation depth in lowering steps");
  generate->add_option("--format", gen.format, "text | dot | json");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "machine-check an isomorphism or closure statement");
  verify->add_option("kind", ver.kind, "iso-bla | iso-binf | op-equiv | closure | c-indep | product")
      ->required();
  verify->add_option("-n", ver.n, "rank")->required()->check(CLI::PositiveNumber);
  verify->add_option("--lambda", ver.lambda_text, "highest weight, comma separated");
  int ver_depth = -1;
  auto* ver_depth_opt = verify->add_option("--depth", ver_depth, "truncation depth");
  verify->add_option("--mu", ver.mu_text, "first factor weight (product) or p list (closure)");
  verify->add_option("--tau", ver.tau_text, "second factor weight");
  verify->add_option("--r", ver.r, "family shift");

  ConvertArgs conv;
  auto* convert = app.add_subcommand("convert", "convert an element between realizations (stdin to stdout)");
  convert->add_option("--family", conv.family, "binf | bla")->required();
  convert->add_option("--from", conv.from, "monomial | xform | tableau")->required();
  convert->add_option("--to", conv.to, "monomial | xform | tableau")->required();
  convert->add_option("--lambda", conv.lambda_text, "highest weight, comma separated");
  convert->add_option("--p", conv.p_text, "family exponents");
  Int conv_r = 0;
  auto* conv_r_opt = convert->add_option("--r", conv_r, "family shift");

  MemberArgs mem;
  auto* member = app.add_subcommand("member", "test membership of an element read from stdin");
  member->add_option("--model", mem.model, "monomial-binf | monomial-bla | tableau-binf | tableau-bla")
      ->required();
  member->add_option("-n", mem.n, "rank")->required()->check(CLI::PositiveNumber);
  member->add_option("--lambda", mem.lambda_text, "highest weight, comma separated");
  member->add_option("--p", mem.p_text, "family exponents");
  member->add_option("--r", mem.r, "family shift");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*generate) {
      if (gen_depth_opt->count()) gen.depth = gen_depth;
      return run_generate(gen);
    }
    if (*verify) {
      if (ver_depth_opt->count()) ver.depth = ver_depth;
      return run_verify(ver);
    }
    if (*convert) {
      if (conv_r_opt->count()) conv.r = conv_r;
      return run_convert(conv);
    }
    if (*member) return run_member(mem);
  } catch (const ConfigError& err) {
    std::cerr << "config: " << err.what() << "\n";
    return 2;
  } catch (const Json::exception& err) {
    std::cerr << "input: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}

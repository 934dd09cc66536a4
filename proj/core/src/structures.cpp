#include "nambu/structures.hpp"

#include "nambu/error.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace nambu {

namespace {

Polynomial var(const ContextPtr& ctx, std::string_view name) { return Polynomial::variable(ctx, name); }

std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::size_t parse_size(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("expected a non-negative integer, got '" + s + "'");
  }
  return v;
}

void require_args(std::string_view name, const std::vector<std::string>& args, std::size_t n) {
  if (args.size() != n) {
    throw DomainError("algebra '" + std::string(name) + "' takes " + std::to_string(n) +
                      " parameter(s), got " + std::to_string(args.size()));
  }
}

// Canonical triples (i, i+1, i+3) mod 7, zero-based.
std::array<std::array<std::size_t, 3>, 7> fano_triples() {
  std::array<std::array<std::size_t, 3>, 7> t{};
  for (std::size_t i = 0; i < 7; ++i) t[i] = {i, (i + 1) % 7, (i + 3) % 7};
  return t;
}

StructureTable canonical_malcev_table(const ContextPtr& ctx) {
  StructureTable table(ctx, 2);
  std::map<IndexTuple, bool> seen;
  auto put = [&](std::size_t a, std::size_t b, std::size_t c) {
    IndexTuple key{a, b};
    sort_sign(key);
    if (!seen.emplace(key, true).second) {
      throw DomainError("canonical Malcev table: pair assigned twice");
    }
    table.set({a, b}, Polynomial::variable(ctx, c));
  };
  for (const auto& [a, b, c] : fano_triples()) {
    put(a, b, c);
    put(b, c, a);
    put(c, a, b);
  }
  if (seen.size() != 21) throw DomainError("canonical Malcev table is incomplete");
  return table;
}

} // namespace

// ------------------------------------------------------------ linear algebra

std::vector<std::vector<Rational>> gram_matrix(const Polynomial& f) {
  const std::size_t n = f.num_vars();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial di = f.derivative(i);
    for (std::size_t j = 0; j < n; ++j) g[i][j] = di.derivative(j).constant_term();
  }
  return g;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

// ------------------------------------------------------------- constructors

AlgebraSpec make_sl2() {
  const auto ctx = make_context({"e", "f", "h"});
  const auto e = var(ctx, "e"), f = var(ctx, "f"), h = var(ctx, "h");
  StructureTable table(ctx, 2);
  table.set({2, 0}, e * Rational(2));  // {h,e} = 2e
  table.set({2, 1}, f * Rational(-2)); // {h,f} = -2f
  table.set({0, 1}, h);                // {e,f} = h
  const Polynomial c = h * h * Rational(1, 2) + e * f * Rational(2);
  return AlgebraSpec{"sl2", TableBracket(std::move(table)), JacobianBracket(c, 2), c, {}, true};
}

AlgebraSpec make_nlie(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() != 2) {
    throw DomainError("make_nlie: f must be a nonzero homogeneous quadratic form");
  }
  const auto& ctx = f.context();
  if (ctx->size() < 3) throw DomainError("make_nlie: need at least 3 variables (n >= 2)");
  const std::size_t n = ctx->size() - 1;
  JacobianBracket jb(f, n);
  const bool nondegenerate = determinant(gram_matrix(f)) != 0;
  return AlgebraSpec{"nlie", TableBracket(jb.generator_table()), jb, f, {}, nondegenerate};
}

AlgebraSpec make_nlie_diagonal(std::span<const Rational> alphas) {
  if (alphas.size() < 3) throw DomainError("nlie needs at least 3 parameters");
  const std::size_t n = alphas.size() - 1;
  const auto ctx = indexed_context("e", n + 1);
  Polynomial f(ctx);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t i = k + 1; // 1-based
    const Rational sign = ((n - i + 1) % 2 == 0) ? 1 : -1;
    f += Polynomial::term(ctx, Monomial::variable(k, 2), sign * alphas[k] / 2);
  }
  auto spec = make_nlie(f);
  for (std::size_t k = 0; k <= n; ++k) spec.parameters["alpha" + std::to_string(k + 1)] = alphas[k];
  return spec;
}

AlgebraSpec make_quadric(std::size_t arity) {
  if (arity < 2) throw DomainError("quadric arity must be at least 2");
  const auto ctx = indexed_context("x", arity + 1);
  Polynomial c(ctx);
  for (std::size_t i = 0; i <= arity; ++i) c += Polynomial::term(ctx, Monomial::variable(i, 2), 1);
  auto spec = make_jacobian_algebra(c, arity, "quadric");
  spec.parameters["n"] = Rational(static_cast<long>(arity));
  spec.simple = true;
  return spec;
}

AlgebraSpec make_elliptic(const Rational& alpha) {
  const auto ctx = make_context({"x", "y", "z"});
  const auto x = var(ctx, "x"), y = var(ctx, "y"), z = var(ctx, "z");
  const Polynomial c = (x.pow(3) + y.pow(3) + z.pow(3)) * Rational(1, 3) - x * y * z * alpha;
  auto spec = make_jacobian_algebra(c, 2, "elliptic");
  spec.parameters["alpha"] = alpha;
  return spec;
}

AlgebraSpec make_malcev_canonical() {
  const auto ctx = indexed_context("e", 7);
  Polynomial c(ctx);
  for (std::size_t i = 0; i < 7; ++i) c += Polynomial::term(ctx, Monomial::variable(i, 2), 1);
  return AlgebraSpec{"malcev-canonical", TableBracket(canonical_malcev_table(ctx)), std::nullopt, c,
                     {}, std::nullopt};
}

AlgebraSpec make_malcev_abg(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  if (alpha == 0 || beta == 0 || gamma == 0) {
    throw DomainError("malcev-abg parameters must be nonzero");
  }
  // f_i = sqrt(alpha^a beta^b gamma^c) e_i; exponents (a, b, c) per generator.
  static constexpr std::array<std::array<int, 3>, 7> scale = {{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 0, 1},
  }};
  const std::array<Rational, 3> params{alpha, beta, gamma};

  const auto ectx = indexed_context("e", 7);
  const auto ctx = indexed_context("f", 7);
  const auto canonical = canonical_malcev_table(ectx);
  StructureTable table(ctx, 2);
  for (const auto& [tuple, value] : canonical.entries()) {
    // Every canonical product is +-e_c.
    const auto& t = value.leading_term();
    std::size_t target = 0;
    while (t.monomial[target] == 0) ++target;
    Rational coeff = t.coeff;
    for (std::size_t p = 0; p < 3; ++p) {
      const int twice = scale[tuple[0]][p] + scale[tuple[1]][p] - scale[target][p];
      if (twice < 0 || twice % 2 != 0) {
        throw DomainError("malcev-abg: non-polynomial parameter power in the scaled table");
      }
      for (int k = 0; k < twice / 2; ++k) coeff *= params[p];
    }
    table.set(tuple, Polynomial::term(ctx, Monomial::variable(target), coeff));
  }

  const std::array<Rational, 7> weights{beta * gamma, alpha * gamma, alpha * beta, gamma, alpha,
                                        Rational(1), beta};
  Polynomial c(ctx);
  for (std::size_t i = 0; i < 7; ++i) c += Polynomial::term(ctx, Monomial::variable(i, 2), weights[i]);
  return AlgebraSpec{"malcev-abg",
                     TableBracket(std::move(table)),
                     std::nullopt,
                     c,
                     {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}},
                     std::nullopt};
}

AlgebraSpec make_malcev_splittable() {
  const auto ctx = make_context({"h", "x", "y", "z", "x'", "y'", "z'"});
  enum : std::size_t { H, X, Y, Z, Xp, Yp, Zp };
  const auto g = [&](std::size_t i) { return Polynomial::variable(ctx, i); };
  StructureTable t(ctx, 2);
  t.set({H, X}, g(X) * Rational(2));
  t.set({H, Y}, g(Y) * Rational(2));
  t.set({H, Z}, g(Z) * Rational(2));
  t.set({H, Xp}, g(Xp) * Rational(-2));
  t.set({H, Yp}, g(Yp) * Rational(-2));
  t.set({H, Zp}, g(Zp) * Rational(-2));
  t.set({X, Xp}, g(H));
  t.set({Y, Yp}, g(H));
  t.set({Z, Zp}, g(H));
  t.set({X, Y}, g(Zp) * Rational(2));
  t.set({Y, Z}, g(Xp) * Rational(2));
  t.set({Z, X}, g(Yp) * Rational(2));
  t.set({Xp, Yp}, g(Z) * Rational(-2));
  t.set({Yp, Zp}, g(X) * Rational(-2));
  t.set({Zp, Xp}, g(Y) * Rational(-2));
  const Polynomial c = -(g(X) * g(Xp) + g(Y) * g(Yp) + g(Z) * g(Zp) + g(H) * g(H) * Rational(1, 4));
  return AlgebraSpec{"malcev-splittable", TableBracket(std::move(t)), std::nullopt, c, {},
                     std::nullopt};
}

AlgebraSpec make_jacobian_algebra(const Polynomial& casimir, std::size_t arity, std::string name) {
  JacobianBracket jb(casimir, arity);
  return AlgebraSpec{std::move(name), jb, jb, casimir, {}, std::nullopt};
}

AlgebraSpec make_algebra(std::string_view spec) {
  const auto open = spec.find('(');
  const std::string name(spec.substr(0, open));
  std::vector<std::string> args;
  if (open != std::string_view::npos) {
    if (spec.back() != ')') throw DomainError("malformed algebra name '" + std::string(spec) + "'");
    args = split_args(spec.substr(open + 1, spec.size() - open - 2));
  }
  if (name == "sl2") {
    require_args(name, args, 0);
    return make_sl2();
  }
  if (name == "elliptic") {
    require_args(name, args, 1);
    return make_elliptic(parse_rational(args[0]));
  }
  if (name == "quadric") {
    require_args(name, args, 1);
    return make_quadric(parse_size(args[0]));
  }
  if (name == "nlie") {
    std::vector<Rational> alphas;
    for (const auto& a : args) alphas.push_back(parse_rational(a));
    return make_nlie_diagonal(alphas);
  }
  if (name == "malcev-canonical") {
    require_args(name, args, 0);
    return make_malcev_canonical();
  }
  if (name == "malcev-abg") {
    require_args(name, args, 3);
    return make_malcev_abg(parse_rational(args[0]), parse_rational(args[1]), parse_rational(args[2]));
  }
  if (name == "malcev-splittable") {
    require_args(name, args, 0);
    return make_malcev_splittable();
  }
  throw DomainError("unknown algebra '" + name + "'");
}

std::vector<std::string> builtin_algebra_names() {
  return {"sl2",
          "elliptic(alpha)",
          "quadric(n)",
          "nlie(alpha1,...,alpha_{n+1})",
          "malcev-canonical",
          "malcev-abg(alpha,beta,gamma)",
          "malcev-splittable"};
}

std::string describe(const AlgebraSpec& spec) {
  const auto& ctx = spec.bracket.context();
  std::ostringstream os;
  os << "algebra     " << spec.name << "\n";
  os << "generators  ";
  for (std::size_t i = 0; i < ctx->size(); ++i) os << (i ? ", " : "") << ctx->name(i);
  os << "\narity       " << spec.bracket.arity() << "\n";
  for (const auto& [k, v] : spec.parameters) os << "parameter   " << k << " = " << to_string(v) << "\n";
  if (spec.casimir) os << "casimir     " << spec.casimir->to_string() << "\n";
  if (spec.simple) os << "simple      " << (*spec.simple ? "yes" : "no") << "\n";
  os << "table:\n";
  for (const auto& t : increasing_tuples(ctx->size(), spec.bracket.arity())) {
    const Polynomial v = spec.bracket.on_generators(t);
    if (v.is_zero()) continue;
    os << "  [";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << ctx->name(t[i]);
    os << "] = " << v.to_string() << "\n";
  }
  return os.str();
}

} // namespace nambu

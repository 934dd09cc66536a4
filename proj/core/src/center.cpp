#include "nambu/analysis.hpp"

#include "linalg.hpp"
#include "nambu/error.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nambu {

namespace {

Polynomial maybe_reduce(const Polynomial& p, const QuotientContext* q) {
  return q ? q_reduce(*q, p) : p;
}

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
  if (den.is_constant()) return num * (Rational(1) / den.constant_term());
  auto res = divide(num, std::span<const Polynomial>(&den, 1));
  if (!res.remainder.is_zero()) throw std::logic_error("fraction-free step left a remainder");
  return std::move(res.quotients.front());
}

void monomials_of_degree(std::size_t nvars, unsigned degree, std::size_t var, Monomial cur,
                         std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, degree);
    out.push_back(cur);
    return;
  }
  for (unsigned e = degree + 1; e-- > 0;) {
    Monomial next = cur;
    next.set(var, e);
    monomials_of_degree(nvars, degree - e, var + 1, next, out);
  }
}

// Monomials of degree <= max_degree, descending grevlex.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= max_degree; ++d) monomials_of_degree(nvars, d, 0, Monomial{}, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
  return out;
}

std::vector<Polynomial> center_probe(const Bracket& b, const std::vector<Monomial>& columns,
                                     const QuotientContext* q) {
  const auto& ctx = b.context();
  const auto tuples = increasing_tuples(ctx->size(), b.arity() - 1);

  std::map<std::pair<std::size_t, Monomial>, std::size_t,
           bool (*)(const std::pair<std::size_t, Monomial>&, const std::pair<std::size_t, Monomial>&)>
      row_of([](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return grevlex_compare(x.second, y.second) > 0;
      });
  detail::Matrix matrix;
  for (std::size_t col = 0; col < columns.size(); ++col) {
    const Polynomial mono = Polynomial::term(ctx, columns[col], 1);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      std::vector<Polynomial> args{mono};
      for (auto g : tuples[t]) args.push_back(Polynomial::variable(ctx, g));
      const Polynomial value = maybe_reduce(b(args), q);
      for (const auto& term : value.terms()) {
        auto [it, fresh] = row_of.emplace(std::make_pair(t, term.monomial), matrix.size());
        if (fresh) matrix.emplace_back(columns.size());
        matrix[it->second][col] = term.coeff;
      }
    }
  }
  std::vector<Polynomial> basis;
  for (const auto& v : detail::nullspace(std::move(matrix), columns.size())) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (v[c] != 0) terms.push_back({columns[c], v[c]});
    }
    basis.push_back(Polynomial::from_terms(ctx, std::move(terms)));
  }
  return basis;
}

} // namespace

MembershipResult center_membership_jacobian(const JacobianBracket& b, const Polynomial& f,
                                            const QuotientContext* q) {
  require_same_context(b.context(), f.context());
  const auto& c = b.casimir();
  const std::size_t n = b.context()->size();
  std::vector<Polynomial> df, dc;
  for (std::size_t i = 0; i < n; ++i) {
    df.push_back(f.derivative(i));
    dc.push_back(c.derivative(i));
  }
  MembershipResult out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Polynomial minor = maybe_reduce(df[i] * dc[j] - df[j] * dc[i], q);
      if (minor.is_zero()) continue;
      out.member = false;
      out.witnesses.push_back({{i, j}, std::move(minor)});
    }
  }
  return out;
}

MembershipResult center_membership_table(const TableBracket& b, const Polynomial& f,
                                         const QuotientContext* q) {
  require_same_context(b.context(), f.context());
  const auto& ctx = b.context();
  MembershipResult out;
  for (const auto& t : increasing_tuples(ctx->size(), b.arity() - 1)) {
    std::vector<Polynomial> args{f};
    for (auto g : t) args.push_back(Polynomial::variable(ctx, g));
    Polynomial value = maybe_reduce(b(args), q);
    if (value.is_zero()) continue;
    out.member = false;
    out.witnesses.push_back({t, std::move(value)});
  }
  return out;
}

MembershipResult center_membership(const Bracket& b, const Polynomial& f, const QuotientContext* q) {
  if (const auto* jb = b.as_jacobian()) return center_membership_jacobian(*jb, f, q);
  return center_membership_table(*b.as_table(), f, q);
}

std::size_t jacobian_rank(std::span<const Polynomial> fs) {
  if (fs.empty()) return 0;
  const auto& ctx = fs.front().context();
  const std::size_t rows = fs.size(), cols = ctx->size();
  std::vector<std::vector<Polynomial>> m;
  for (const auto& f : fs) {
    require_same_context(ctx, f.context());
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < cols; ++j) row.push_back(f.derivative(j));
    m.push_back(std::move(row));
  }
  Polynomial prev = Polynomial::constant(ctx, 1);
  std::size_t rank = 0;
  for (std::size_t s = 0; s < std::min(rows, cols); ++s) {
    // Full pivoting: bring any nonzero entry of the trailing block to (s, s).
    bool found = false;
    for (std::size_t i = s; i < rows && !found; ++i) {
      for (std::size_t j = s; j < cols && !found; ++j) {
        if (m[i][j].is_zero()) continue;
        std::swap(m[i], m[s]);
        for (auto& row : m) std::swap(row[j], row[s]);
        found = true;
      }
    }
    if (!found) break;
    for (std::size_t i = s + 1; i < rows; ++i) {
      for (std::size_t j = s + 1; j < cols; ++j) {
        m[i][j] = exact_quotient(m[s][s] * m[i][j] - m[i][s] * m[s][j], prev);
      }
      m[i][s] = Polynomial(ctx);
    }
    prev = m[s][s];
    ++rank;
  }
  return rank;
}

bool jacobian_dependence(std::span<const Polynomial> fs) { return jacobian_rank(fs) < fs.size(); }

std::vector<Polynomial> center_probe_quotient(const QuotientContext& q, unsigned max_degree) {
  const auto& lead = q.modulus_basis().generators().front().leading_term().monomial;
  auto columns = monomials_up_to(q.context()->size(), max_degree);
  std::erase_if(columns, [&](const Monomial& m) { return lead.divides(m); });
  return center_probe(q.bracket(), columns, &q);
}

std::vector<Polynomial> center_probe_ambient(const Bracket& b, unsigned max_degree) {
  return center_probe(b, monomials_up_to(b.context()->size(), max_degree), nullptr);
}

} // namespace nambu

#include "oscoh/orlik_solomon.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "oscoh/errors.hpp"

namespace oscoh {

namespace {

using Memo = std::unordered_map<Mask, OsElement>;

// Elements of s strictly greater than c.
Mask above(Mask s, int c) { return s & ~((bit(c) << 1) - 1); }

// Smallest element of the cone ground set outside s that lies in the closure
// of the elements of s above it; -1 when s contains no broken circuit.
int broken_circuit_witness(const Matroid& cone, Mask s) {
  for (int c = 0; c < cone.size(); ++c) {
    if (s & bit(c)) continue;
    Mask upper = above(s, c);
    if (cone.rank(upper | bit(c)) == cone.rank(upper)) return c;
  }
  return -1;
}

void accumulate(std::map<Mask, std::int64_t>& acc, const OsElement& x, std::int64_t factor) {
  for (const auto& t : x) acc[t.monomial] += factor * t.coefficient;
}

OsElement to_element(const std::map<Mask, std::int64_t>& acc) {
  OsElement out;
  for (const auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return lex_less(a.monomial, b.monomial); });
  return out;
}

const OsElement& reduce(const Matroid& cone, Mask s, Memo& memo) {
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  OsElement result;
  if (cone.independent(s)) {
    const int c = broken_circuit_witness(cone, s);
    if (c < 0) {
      result.push_back({s, 1});
    } else if (c > 0) {
      // T = S + c is dependent, so its boundary vanishes:
      // e_S = -(-1)^pos(c) * sum_{i != pos(c)} (-1)^i e_{T - t_i}.
      const Mask t = s | bit(c);
      const auto elems = elements(t);
      const auto pos_c = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), c) - elems.begin());
      std::map<Mask, std::int64_t> acc;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i == pos_c) continue;
        const std::int64_t sign = ((i + pos_c) % 2 == 0) ? -1 : 1;
        accumulate(acc, reduce(cone, t & ~bit(elems[i]), memo), sign);
      }
      result = to_element(acc);
    }
    // c == 0: the hyperplanes of S do not meet, e_S = 0.
  }
  return memo.emplace(s, std::move(result)).first->second;
}

void append_signed(std::ostringstream& os, std::int64_t c, const std::string& var, bool first) {
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  std::int64_t a = c < 0 ? -c : c;
  if (a != 1) os << a << "*";
  os << var;
}

}  // namespace

std::vector<Mask> circuits(const Arrangement& arr) { return arr.cone_circuits(); }

bool is_nbc(const Arrangement& arr, Mask s) {
  if (s & 1) return false;
  return arr.cone().independent(s) && broken_circuit_witness(arr.cone(), s) < 0;
}

std::vector<Mask> nbc_basis(const Arrangement& arr, int q) {
  if (q < 0) return {};
  std::vector<Mask> level{Mask{0}};
  for (int d = 0; d < q; ++d) {
    std::vector<Mask> next;
    for (Mask s : level) {
      const int top = s ? 31 - __builtin_clz(s) : 0;
      for (int j = top + 1; j <= arr.size(); ++j) {
        if (is_nbc(arr, s | bit(j))) next.push_back(s | bit(j));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), lex_less);
  return level;
}

OsElement reduce_to_nbc(const Arrangement& arr, Mask s) {
  if (s & ~arr.hyperplanes()) throw InvalidArgumentError("monomial uses indices outside 1..n");
  Memo memo;
  return reduce(arr.cone(), s, memo);
}

namespace {

AomotoMatrix build_matrix(const Arrangement& arr, int q, const std::vector<Mask>& rows, const std::vector<Mask>& cols,
                          Memo& memo) {
  AomotoMatrix m;
  m.degree = q;
  m.variables = arr.size();
  m.row_basis = rows;
  m.col_basis = cols;
  std::unordered_map<Mask, std::size_t> col_index;
  for (std::size_t c = 0; c < cols.size(); ++c) col_index.emplace(cols[c], c);
  const auto n = static_cast<std::size_t>(arr.size());
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::int64_t>> acc;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Mask s = rows[r];
    for (int j = 1; j <= arr.size(); ++j) {
      if (s & bit(j)) continue;
      // e_j wedge e_S = (-1)^{#(s in S, s < j)} e_{S + j}
      const std::int64_t sign = (popcount(s & (bit(j) - 1)) % 2 == 0) ? 1 : -1;
      for (const auto& t : reduce(arr.cone(), s | bit(j), memo)) {
        auto& form = acc[{r, col_index.at(t.monomial)}];
        if (form.empty()) form.assign(n, 0);
        form[static_cast<std::size_t>(j - 1)] += sign * t.coefficient;
      }
    }
  }
  for (auto& [rc, form] : acc) {
    if (std::all_of(form.begin(), form.end(), [](std::int64_t v) { return v == 0; })) continue;
    m.entries.push_back({rc.first, rc.second, std::move(form)});
  }
  return m;
}

}  // namespace

AomotoMatrix aomoto_matrix(const Arrangement& arr, int q) {
  Memo memo;
  return build_matrix(arr, q, nbc_basis(arr, q), nbc_basis(arr, q + 1), memo);
}

AomotoComplex aomoto_complex(const Arrangement& arr) {
  AomotoComplex cx;
  cx.n = arr.size();
  cx.rank = arr.rank();
  for (int q = 0; q <= arr.rank() + 1; ++q) cx.bases.push_back(nbc_basis(arr, q));
  Memo memo;
  for (int q = 0; q <= arr.rank(); ++q) {
    cx.matrices.push_back(build_matrix(arr, q, cx.bases[static_cast<std::size_t>(q)],
                                       cx.bases[static_cast<std::size_t>(q) + 1], memo));
  }
  cx.bases.pop_back();
  return cx;
}

std::vector<std::int64_t> AomotoComplex::dimensions() const {
  std::vector<std::int64_t> d;
  for (const auto& b : bases) d.push_back(static_cast<std::int64_t>(b.size()));
  return d;
}

IntMatrix AomotoMatrix::evaluate(std::span<const Integer> k) const {
  if (k.size() != static_cast<std::size_t>(variables)) throw LengthMismatchError("weight vector length mismatch");
  IntMatrix out(rows(), cols(), Integer(0));
  for (const auto& e : entries) {
    Integer v = 0;
    for (std::size_t j = 0; j < e.form.size(); ++j) {
      if (e.form[j] != 0) v += e.form[j] * k[j];
    }
    out(e.row, e.col) = v;
  }
  return out;
}

RationalMatrix AomotoMatrix::evaluate(std::span<const Rational> lambda) const {
  if (lambda.size() != static_cast<std::size_t>(variables)) throw LengthMismatchError("weight vector length mismatch");
  RationalMatrix out(rows(), cols(), Rational(0));
  for (const auto& e : entries) {
    Rational v = 0;
    for (std::size_t j = 0; j < e.form.size(); ++j) {
      if (e.form[j] != 0) v += Rational(e.form[j]) * lambda[j];
    }
    out(e.row, e.col) = v;
  }
  return out;
}

ModMatrix AomotoMatrix::evaluate_mod(std::span<const Integer> k, std::uint64_t modulus) const {
  if (k.size() != static_cast<std::size_t>(variables)) throw LengthMismatchError("weight vector length mismatch");
  std::vector<std::uint64_t> kr(k.size());
  Integer r;
  for (std::size_t j = 0; j < k.size(); ++j) {
    mpz_fdiv_r_ui(r.get_mpz_t(), k[j].get_mpz_t(), modulus);
    kr[j] = r.get_ui();
  }
  const auto sm = static_cast<std::int64_t>(modulus);
  ModMatrix out(rows(), cols(), 0);
  for (const auto& e : entries) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < e.form.size(); ++j) {
      if (e.form[j] == 0) continue;
      std::int64_t c = e.form[j] % sm;
      if (c < 0) c += sm;
      v = (v + static_cast<std::uint64_t>(c) * kr[j]) % modulus;
    }
    out(e.row, e.col) = v;
  }
  return out;
}

std::string format_linear_form(std::span<const std::int64_t> form) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < form.size(); ++j) {
    if (form[j] == 0) continue;
    append_signed(os, form[j], "y" + std::to_string(j + 1), first);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string AomotoMatrix::dump() const {
  std::ostringstream os;
  os << "mu^" << degree << " rows=" << rows() << " cols=" << cols() << "\n";
  std::size_t next = 0;
  const std::vector<std::int64_t> zero(static_cast<std::size_t>(variables), 0);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      if (c) os << ", ";
      if (next < entries.size() && entries[next].row == r && entries[next].col == c) {
        os << format_linear_form(entries[next].form);
        ++next;
      } else {
        os << "0";
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace oscoh

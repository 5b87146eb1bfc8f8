#include "sqtaut/pairing.hpp"

#include <algorithm>
#include <map>

#include "sqtaut/errors.hpp"
#include "sqtaut/genus_zero.hpp"

namespace sqtaut {

namespace {

void weak_compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    cur.push_back(first);
    weak_compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::string describe(const SetPartition& p) {
  std::string s = "(";
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (b) s += ",";
    s += "{";
    for (std::size_t i = 0; i < p[b].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p[b][i]);
    }
    s += "}";
  }
  return s + ")";
}

}  // namespace

std::vector<SetPartition> set_partitions(int d) {
  if (d < 1) throw InputError("set_partitions: d must be >= 1");
  // Restricted growth strings; block of point j is rgs[j-1].
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int pos, int blocks) -> void {
    if (pos == d) {
      SetPartition p(static_cast<std::size_t>(blocks));
      for (int j = 0; j < d; ++j) p[static_cast<std::size_t>(rgs[static_cast<std::size_t>(j)])].push_back(j + 1);
      out.push_back(std::move(p));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<PairSpec> enumerate_P(int d, int k) {
  if (d < 1) throw InputError("enumerate_P: d must be >= 1");
  if (k < 0) throw InputError("enumerate_P: k must be >= 0");
  auto parts = set_partitions(d);
  std::sort(parts.begin(), parts.end(), [](const SetPartition& a, const SetPartition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<PairSpec> out;
  for (const auto& p : parts) {
    const int l = static_cast<int>(p.size());
    if (l < d - k) continue;
    std::vector<std::vector<int>> taus;
    std::vector<int> cur;
    weak_compositions(k - d + l, l, cur, taus);
    std::sort(taus.begin(), taus.end());
    for (auto& t : taus) out.push_back(PairSpec{d, k, p, std::move(t)});
  }
  return out;
}

int ChainStratum::dimension() const {
  int dim = 0;
  for (const auto& c : components) dim += c.dimension();
  return dim;
}

ChainStratum chain_stratum(const PairSpec& spec) {
  const int l = spec.length();
  ChainStratum s;
  s.source = spec;
  s.heavy_markings = 4 + spec.k - spec.d + 2 * l;
  int next_label = 1;
  auto take = [&](int count) {
    std::vector<int> labels;
    for (int i = 0; i < count; ++i) labels.push_back(next_label++);
    return labels;
  };
  s.components.push_back({take(2), {}, 1});
  for (int i = 0; i < l; ++i) {
    auto ui = static_cast<std::size_t>(i);
    s.components.push_back({take(spec.tau[ui] + 1), spec.partition[ui], 2});
    s.psi_labels.push_back(s.components.back().heavy.front());
  }
  s.components.push_back({take(2), {}, 1});
  if (next_label - 1 != s.heavy_markings) throw DomainError("chain_stratum: heavy marking count mismatch");
  return s;
}

const char* to_string(PairingEntry::Status s) {
  switch (s) {
    case PairingEntry::Status::ProvenZero: return "proven-zero";
    case PairingEntry::Status::Computed: return "computed";
    case PairingEntry::Status::Unevaluated: return "unevaluated";
  }
  return "?";
}

PairingEntry pairing_entry(const PairSpec& row, const ChainStratum& col) {
  const PairSpec& target = col.source;
  if (row.d != target.d || row.k != target.k) throw InputError("pairing_entry: (d,k) mismatch");
  const int l = row.length();
  const int lp = target.length();
  PairingEntry e;
  if (l < lp) {
    e.status = PairingEntry::Status::ProvenZero;
    e.value = 0;
    e.evidence = "l=" + std::to_string(l) + " < l'=" + std::to_string(lp) +
                 ": some chain component receives no diagonal";
    return e;
  }
  if (l > lp) {
    e.status = PairingEntry::Status::Unevaluated;
    e.evidence = "l > l': below the diagonal blocks, not needed for rank";
    return e;
  }
  if (row.partition != target.partition) {
    e.status = PairingEntry::Status::ProvenZero;
    e.value = 0;
    e.evidence = "l = l', partitions differ: stratum misses the diagonal intersection";
    return e;
  }
  Rational value = 1;
  std::string factors;
  for (int i = 0; i < l; ++i) {
    auto ui = static_cast<std::size_t>(i);
    const int n = target.tau[ui] + 4;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    exps.front() = 1;          // psi at r'_i
    exps.back() += row.tau[ui];  // psi at the collapsed diagonal point
    Rational f = psi_integral_M0n(exps);
    if (!factors.empty()) factors += "*";
    factors += f.str();
    value *= f;
  }
  e.status = PairingEntry::Status::Computed;
  e.value = value;
  e.evidence = "same partition " + describe(row.partition) + ": product of M_0,n psi integrals " + factors;
  return e;
}

PairingMatrix pairing_matrix(int d, int k) {
  PairingMatrix m;
  m.d = d;
  m.k = k;
  m.rows = enumerate_P(d, k);
  for (const auto& spec : m.rows) m.cols.push_back(chain_stratum(spec));
  m.entries.resize(m.rows.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    m.entries[r].reserve(m.cols.size());
    for (const auto& col : m.cols) m.entries[r].push_back(pairing_entry(m.rows[r], col));
  }
  return m;
}

std::size_t exact_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

RankCertificate rank_certificate(int d, int k, int max_d, int max_k) {
  if (d < 1 || k < 0) throw InputError("rank_certificate: need d >= 1, k >= 0");
  if (d > max_d || k > max_k)
    throw InputError("rank_certificate: (d,k) = (" + std::to_string(d) + "," + std::to_string(k) +
                     ") exceeds the configured bound (" + std::to_string(max_d) + "," +
                     std::to_string(max_k) + ")");
  RankCertificate cert;
  cert.d = d;
  cert.k = k;
  cert.matrix = pairing_matrix(d, k);
  const auto& M = cert.matrix;
  cert.dimension = M.rows.size();

  for (std::size_t r = 0; r < M.rows.size(); ++r) {
    for (std::size_t c = 0; c < M.cols.size(); ++c) {
      const auto& e = M.entries[r][c];
      const int l = M.rows[r].length();
      const int lp = M.cols[c].length();
      switch (e.status) {
        case PairingEntry::Status::ProvenZero: ++cert.proven_zero; break;
        case PairingEntry::Status::Computed: ++cert.computed; break;
        case PairingEntry::Status::Unevaluated: ++cert.unevaluated; break;
      }
      if (l < lp && e.status != PairingEntry::Status::ProvenZero)
        cert.failures.push_back("entry above the diagonal blocks is not proven zero");
      if (l == lp && e.status == PairingEntry::Status::Unevaluated)
        cert.failures.push_back("entry in a diagonal block is unevaluated");
    }
    if (M.cols[r].dimension() != M.rows[r].length() + k)
      cert.failures.push_back("stratum dimension differs from l + k");
  }

  std::map<int, std::vector<std::size_t>, std::greater<>> by_length;
  for (std::size_t i = 0; i < M.rows.size(); ++i) by_length[M.rows[i].length()].push_back(i);
  for (const auto& [length, idx] : by_length) {
    DiagonalBlockReport rep;
    rep.length = length;
    rep.size = idx.size();
    rep.is_diagonal = true;
    bool first = true;
    std::vector<std::vector<Rational>> block;
    for (std::size_t a : idx) {
      std::vector<Rational> row;
      for (std::size_t b : idx) {
        const auto& e = M.entries[a][b];
        Rational v = e.status == PairingEntry::Status::Computed ? e.value : Rational(0);
        if (a != b && !v.is_zero()) rep.is_diagonal = false;
        if (a == b) {
          if (v.sign() <= 0)
            cert.failures.push_back("diagonal entry is not positive at row " + std::to_string(a));
          if (first || v < rep.min_diagonal) rep.min_diagonal = v;
          first = false;
        }
        row.push_back(v);
      }
      block.push_back(std::move(row));
    }
    rep.rank = exact_rank(std::move(block));
    if (!rep.is_diagonal) cert.failures.push_back("diagonal block of length " + std::to_string(length) + " is not diagonal");
    if (rep.rank != rep.size) cert.failures.push_back("diagonal block of length " + std::to_string(length) + " is singular");
    cert.blocks.push_back(rep);
  }
  cert.valid = cert.failures.empty();
  return cert;
}

}  // namespace sqtaut

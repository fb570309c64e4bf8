#include "nilrep/chain_decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "nilrep/errors.hpp"

namespace nilrep {

namespace {

std::string cell(std::size_t k, std::size_t j) {
  return "T_{" + std::to_string(k) + "," + std::to_string(j) + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// OperatorChain

OperatorChain::OperatorChain(std::size_t space_dim, std::vector<Matrix> frame,
                             std::vector<Subspace> levels)
    : space_dim_(space_dim), frame_(std::move(frame)), levels_(std::move(levels)) {
  std::vector<Vector> flat;
  for (const auto& f : frame_) {
    if (f.rows() != space_dim_ || f.cols() != space_dim_)
      throw InputError("operator chain frame matrix has the wrong shape");
    flat.push_back(f.flatten());
  }
  if (!flat.empty() && rank(Matrix::from_rows(flat)) != flat.size())
    throw InputError("operator chain frame is linearly dependent");
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (levels_[k].ambient_dim() != frame_.size())
      throw InputError("operator chain level " + std::to_string(k + 1) +
                       " is not expressed in frame coordinates");
    if (k > 0 && !levels_[k - 1].contains(levels_[k]))
      throw InputError("operator chain levels are not nested at level " + std::to_string(k + 1));
  }
}

OperatorChain OperatorChain::from_representation(const Representation& rep,
                                                 const Filtration& filt) {
  if (&rep.algebra() != &filt.algebra() && !(rep.algebra() == filt.algebra()))
    throw InputError("representation and filtration refer to different algebras");
  return OperatorChain(rep.space_dim(), rep.matrices(), filt.chain());
}

OperatorChain OperatorChain::from_levels(std::size_t space_dim,
                                         const std::vector<std::vector<Matrix>>& levels) {
  std::vector<Matrix> frame;
  if (!levels.empty()) {
    EchelonBuilder builder(space_dim * space_dim);
    for (const auto& m : levels.front()) {
      if (m.rows() != space_dim || m.cols() != space_dim)
        throw InputError("operator chain matrix has the wrong shape");
      if (builder.insert(m.flatten())) frame.push_back(m);
    }
  }
  std::vector<Vector> flat;
  for (const auto& f : frame) flat.push_back(f.flatten());
  const CoordinateSystem coords(space_dim * space_dim, flat);
  std::vector<Subspace> subspaces;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    std::vector<Vector> rows;
    for (const auto& m : levels[k]) {
      if (m.rows() != space_dim || m.cols() != space_dim)
        throw InputError("operator chain matrix has the wrong shape");
      auto c = coords.coordinates(m.flatten());
      if (!c) throw InputError("level " + std::to_string(k + 1) + " is not contained in level 1");
      rows.push_back(std::move(*c));
    }
    subspaces.push_back(Subspace::span(frame.size(), rows));
  }
  return OperatorChain(space_dim, std::move(frame), std::move(subspaces));
}

Matrix OperatorChain::operator_at(const Vector& coords) const {
  if (coords.size() != frame_.size())
    throw std::invalid_argument("operator_at: coordinate length does not match frame size");
  Matrix out(space_dim_, space_dim_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) != 0) out += frame_[i] * coords[i];
  }
  return out;
}

Matrix OperatorChain::action(const Vector& v) const {
  Matrix out(space_dim_, frame_.size());
  for (std::size_t j = 0; j < frame_.size(); ++j) {
    const Vector col = frame_[j].apply(v);
    for (std::size_t r = 0; r < space_dim_; ++r) out(r, j) = col[r];
  }
  return out;
}

Subspace OperatorChain::image(const Subspace& s, const Vector& v) const {
  const Matrix act = action(v);
  std::vector<Vector> images;
  for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(act.apply(s.basis_vector(i)));
  return Subspace::span(space_dim_, images);
}

std::size_t OperatorChain::image_dim(const Subspace& s, const Vector& v) const {
  return image(s, v).dim();
}

// ---------------------------------------------------------------------------
// Rank vectors

namespace {

constexpr std::size_t kBatch = 8;
constexpr std::size_t kConfirmations = 2;
constexpr std::size_t kRounds = 24;

Vector sample(std::size_t dim, std::uint64_t bound, std::mt19937_64& rng) {
  Vector v(dim);
  for (auto& x : v) {
    const auto draw = static_cast<std::int64_t>(rng() % (2 * bound + 1));
    x = static_cast<long>(draw - static_cast<std::int64_t>(bound));
  }
  return v;
}

std::vector<std::size_t> dims_at(const OperatorChain& chain, const std::vector<Subspace>& levels,
                                 const Vector& v) {
  const Matrix act = chain.action(v);
  std::vector<std::size_t> dims;
  for (const auto& level : levels) {
    std::vector<Vector> images;
    for (std::size_t i = 0; i < level.dim(); ++i) images.push_back(act.apply(level.basis_vector(i)));
    dims.push_back(images.empty() ? 0 : rank(Matrix::from_rows(images)));
  }
  return dims;
}

bool dominates(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

}  // namespace

RankVector find_rank_vector(const OperatorChain& chain, const std::vector<Subspace>& levels,
                            std::mt19937_64& rng) {
  if (levels.empty()) throw std::invalid_argument("find_rank_vector: empty chain");
  std::uint64_t bound = 16;
  for (std::size_t round = 0; round < kRounds; ++round, bound *= 2) {
    std::vector<Vector> batch;
    std::vector<std::vector<std::size_t>> dims;
    for (std::size_t b = 0; b < kBatch; ++b) {
      batch.push_back(sample(chain.space_dim(), bound, rng));
      dims.push_back(dims_at(chain, levels, batch.back()));
    }
    std::optional<std::size_t> best;
    for (std::size_t b = 0; b < kBatch && !best; ++b) {
      if (std::all_of(dims.begin(), dims.end(), [&](const auto& d) { return dominates(dims[b], d); }))
        best = b;
    }
    if (!best) continue;
    bool confirmed = true;
    for (std::size_t c = 0; c < kConfirmations; ++c) {
      const auto extra = dims_at(chain, levels, sample(chain.space_dim(), bound, rng));
      if (!dominates(dims[*best], extra)) confirmed = false;
    }
    if (confirmed) return {std::move(batch[*best]), std::move(dims[*best])};
  }
  throw InvariantError("rank-vector sampling budget exhausted");
}

RankVector find_rank_vector(const OperatorChain& chain, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return find_rank_vector(chain, chain.levels(), rng);
}

// ---------------------------------------------------------------------------
// Decomposition

std::vector<std::size_t> Decomposition::column_dims() const {
  std::vector<std::size_t> r;
  for (const auto& row : grid) r.push_back(row.empty() ? 0 : row.front().dim());
  return r;
}

Decomposition decompose(const OperatorChain& chain, std::uint64_t seed) {
  const std::size_t p = chain.depth();
  if (p == 0) throw InputError("cannot decompose an empty chain");
  for (std::size_t k = 1; k <= p; ++k) {
    if (chain.level(k).is_zero())
      throw InputError("chain level " + std::to_string(k) + " is zero");
  }
  const std::size_t frame = chain.frame_size();
  std::mt19937_64 rng(seed);

  Decomposition dec;
  dec.seed = seed;
  dec.partition.assign(p, 0);
  dec.grid.assign(p, {});
  std::vector<Subspace> current = chain.levels();  // R_1..R_q

  while (true) {
    const RankVector rv = find_rank_vector(chain, current, rng);
    const Subspace annihilator = kernel_basis(chain.action(rv.vector));
    const std::size_t q = current.size();
    std::vector<Subspace> reduced;
    for (const auto& level : current) reduced.push_back(intersect(level, annihilator));

    // Deepest level first; each piece extends the one below it.
    Subspace below(frame);
    for (std::size_t k = q; k-- > 0;) {
      if (reduced[k] == current[k]) {
        throw InvariantError("rank vector is annihilated by the nonzero level " +
                             std::to_string(k + 1));
      }
      Subspace piece = complement_extending(current[k], reduced[k], below);
      dec.grid[k].push_back(piece);
      ++dec.partition[k];
      below = std::move(piece);
    }
    dec.vectors.push_back(rv.vector);

    std::size_t next_q = 0;
    while (next_q < q && !reduced[next_q].is_zero()) ++next_q;
    if (next_q == 0) break;
    reduced.resize(next_q);
    current = std::move(reduced);
  }
  return dec;
}

Decomposition decompose(const Representation& rep, const Filtration& filt, std::uint64_t seed) {
  const auto rep_report = validate_representation(rep);
  if (!rep_report.homomorphism_failures.empty())
    throw InputError("representation is not a homomorphism on basis pair (" +
                     std::to_string(rep_report.homomorphism_failures.front().first + 1) + ", " +
                     std::to_string(rep_report.homomorphism_failures.front().second + 1) + ")");
  if (!rep_report.non_nilpotent.empty())
    throw InputError("representation matrix " + std::to_string(rep_report.non_nilpotent.front() + 1) +
                     " is not nilpotent");
  if (!rep_report.faithful) throw InputError("representation is not faithful");
  const auto filt_report = validate_filtration(filt);
  if (!filt_report.ok()) throw InputError("invalid filtration: " + filt_report.issues.front().detail);
  return decompose(OperatorChain::from_representation(rep, filt), seed);
}

// ---------------------------------------------------------------------------
// Verification

bool CheckReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return !c.applicable || c.passed; });
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

class CheckCollector {
 public:
  CheckResult& get(const std::string& name) {
    for (auto& c : report_.checks) {
      if (c.name == name) return c;
    }
    report_.checks.push_back({name, true, true, {}});
    return report_.checks.back();
  }
  void fail(const std::string& name, std::string why) {
    auto& c = get(name);
    c.passed = false;
    c.failures.push_back(std::move(why));
  }
  CheckReport take() { return std::move(report_); }

 private:
  CheckReport report_;
};

}  // namespace

CheckReport verify_decomposition(const Decomposition& dec, const OperatorChain& chain,
                                 std::size_t p0) {
  CheckCollector out;
  const std::size_t p = chain.depth();
  const std::size_t n = chain.space_dim();
  const std::size_t frame = chain.frame_size();

  for (const char* name : {"partition", "direct_sum", "nesting", "image_dimension", "annihilation",
                           "image_containment", "independence", "trivial_intersection"})
    out.get(name);

  // Shape.
  bool shape_ok = dec.partition.size() == p && dec.grid.size() == p;
  if (shape_ok) {
    for (std::size_t k = 0; k < p; ++k) {
      if (dec.grid[k].size() != dec.partition[k]) shape_ok = false;
      if (k > 0 && dec.partition[k] > dec.partition[k - 1]) shape_ok = false;
    }
    if (dec.partition.back() == 0 || dec.partition.front() != dec.vectors.size()) shape_ok = false;
  }
  if (!shape_ok) {
    out.fail("partition", "partition/grid shape does not match a Young diagram of depth " +
                              std::to_string(p));
    return out.take();
  }
  if (p0 < 1 || p0 > p) {
    out.fail("partition", "p0 out of range");
    return out.take();
  }

  // (1) direct sums and columnwise nesting.
  for (std::size_t k = 1; k <= p; ++k) {
    std::size_t total = 0;
    Subspace acc(frame);
    for (const auto& piece : dec.grid[k - 1]) {
      total += piece.dim();
      acc = sum(acc, piece);
    }
    if (total != chain.level(k).dim() || acc != chain.level(k))
      out.fail("direct_sum", "level " + std::to_string(k) + " is not the direct sum of its row");
    if (k < p) {
      for (std::size_t j = 1; j <= dec.partition[k]; ++j) {
        if (!dec.grid[k - 1][j - 1].contains(dec.grid[k][j - 1]))
          out.fail("nesting", cell(k + 1, j) + " is not contained in " + cell(k, j));
      }
    }
  }

  // (2), (3), (4).
  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t j = 1; j <= dec.partition[k - 1]; ++j) {
      const Subspace& tkj = dec.grid[k - 1][j - 1];
      if (chain.image_dim(tkj, dec.vectors[j - 1]) != tkj.dim())
        out.fail("image_dimension", "dim " + cell(k, j) + " v_" + std::to_string(j) + " != dim " +
                                        cell(k, j));
      for (std::size_t i = 1; i < j; ++i) {
        if (chain.image_dim(tkj, dec.vectors[i - 1]) != 0)
          out.fail("annihilation", cell(k, j) + " does not kill v_" + std::to_string(i));
        const Subspace target = chain.image(dec.grid[k - 1][i - 1], dec.vectors[i - 1]);
        for (std::size_t b = 0; b < tkj.dim(); ++b) {
          const Matrix op = chain.operator_at(tkj.basis_vector(b));
          for (std::size_t c = 0; c < n; ++c) {
            if (!target.contains(op.column(c))) {
              out.fail("image_containment", cell(k, j) + " V is not inside " + cell(k, i) + " v_" +
                                                std::to_string(i));
              c = n;
              b = tkj.dim();
            }
          }
        }
      }
    }
  }

  if (!dec.vectors.empty() && rank(Matrix::from_rows(dec.vectors)) != dec.vectors.size())
    out.fail("independence", "v_1..v_s are linearly dependent");

  // Trivial intersection, applicable for nilpotent T_1 commuting with T_{p0}.
  auto& moreover = out.get("trivial_intersection");
  bool commuting = true;
  const Subspace& central = chain.level(p0);
  for (std::size_t i = 0; i < frame && commuting; ++i) {
    for (std::size_t b = 0; b < central.dim() && commuting; ++b) {
      if (!commutator(chain.frame()[i], chain.operator_at(central.basis_vector(b))).is_zero())
        commuting = false;
    }
  }
  moreover.applicable = commuting && has_common_flag(chain.frame(), n);
  if (moreover.applicable) {
    const Subspace images = chain.image(dec.grid[0][0], dec.vectors[0]);
    std::vector<Vector> head(dec.vectors.begin(),
                             dec.vectors.begin() + static_cast<std::ptrdiff_t>(dec.partition[p0 - 1]));
    if (!intersect(images, Subspace::span(n, head)).is_zero())
      out.fail("trivial_intersection", "T_{1,1} v_1 meets span{v_1..v_{s_p0}}");
  }
  return out.take();
}

// ---------------------------------------------------------------------------
// Adapted basis and block structure

AdaptedBasis build_adapted_basis(const Decomposition& dec, const OperatorChain& chain,
                                 std::size_t p0) {
  const std::size_t p = chain.depth();
  const std::size_t n = chain.space_dim();
  if (p0 < 1 || p0 > p || dec.grid.size() != p || dec.vectors.empty())
    throw std::invalid_argument("build_adapted_basis: decomposition does not match the chain");

  AdaptedBasis ab;
  ab.r = dec.column_dims();
  ab.s_p0 = dec.partition[p0 - 1];

  EchelonBuilder ops(chain.frame_size());
  for (std::size_t k = p; k >= 1; --k) {
    const Subspace& t = dec.grid[k - 1][0];
    for (std::size_t b = 0; b < t.dim(); ++b) {
      auto x = t.basis_vector(b);
      if (ops.insert(x)) ab.operators.push_back(std::move(x));
    }
    if (ab.operators.size() != ab.r[k - 1])
      throw InvariantError("first column of the grid is not nested at level " + std::to_string(k));
  }

  const Vector& v1 = dec.vectors.front();
  std::vector<Vector> columns;
  EchelonBuilder span_v(n);
  for (const auto& x : ab.operators) {
    columns.push_back(chain.operator_at(x).apply(v1));
    if (!span_v.insert(columns.back())) throw InvariantError("degenerate adapted basis: X_i(v_1) dependent");
  }
  std::vector<Vector> head(dec.vectors.begin(), dec.vectors.begin() + static_cast<std::ptrdiff_t>(ab.s_p0));
  for (const auto& v : head) {
    if (!span_v.insert(v)) throw InvariantError("degenerate adapted basis: v's meet T_{1,1} v_1");
  }
  std::vector<Vector> w;
  for (std::size_t i = 0; i < n; ++i) {
    auto e = unit_vector(n, i);
    if (span_v.insert(e)) w.push_back(std::move(e));
  }
  ab.q = w.size();
  for (const auto& x : w) columns.push_back(x);
  for (const auto& v : head) columns.push_back(v);
  ab.basis = Matrix::from_columns(n, columns);
  ab.w = Subspace::span(n, w);
  ab.v0 = Subspace::span(n, head);
  return ab;
}

BlockReport verify_block_structure(const AdaptedBasis& ab, const Decomposition& dec,
                                   const OperatorChain& chain, std::size_t p0) {
  const std::size_t p = chain.depth();
  const std::size_t n = chain.space_dim();
  const std::size_t r1 = ab.r.front();
  const std::size_t v0_col = r1 + ab.q;  // column of v_1
  auto r_at = [&](std::size_t k) { return k >= 1 && k <= p ? ab.r[k - 1] : std::size_t{0}; };

  CheckCollector out;
  for (const char* name : {"first_column_support", "first_column_injective", "lower_blocks_zero",
                           "annihilated_columns", "row_support", "staircase", "central_block_zero"})
    out.get(name);

  BlockReport report;
  const Matrix inv = inverse(ab.basis);
  for (std::size_t k = 1; k <= p; ++k) {
    const std::size_t rk = r_at(k);
    for (std::size_t j = 1; j <= dec.partition[k - 1]; ++j) {
      const Subspace& tkj = dec.grid[k - 1][j - 1];
      std::vector<Vector> first_columns;
      for (std::size_t b = 0; b < tkj.dim(); ++b) {
        const Matrix m = inv * chain.operator_at(tkj.basis_vector(b)) * ab.basis;
        const std::string where = cell(k, j) + " basis element " + std::to_string(b + 1);
        auto zero_region = [&](std::size_t r0, std::size_t r1_, std::size_t c0, std::size_t c1) {
          for (std::size_t r = r0; r < r1_; ++r)
            for (std::size_t c = c0; c < c1; ++c)
              if (sgn(m(r, c)) != 0) return false;
          return true;
        };
        if (j == 1) {
          if (!zero_region(rk, n, v0_col, v0_col + 1))
            out.fail("first_column_support", where + ": v_1 column leaves the first r_k rows");
          Vector col(r1);
          for (std::size_t r = 0; r < r1; ++r) col[r] = m(r, v0_col);
          first_columns.push_back(std::move(col));
        } else {
          if (!zero_region(r1, n, 0, n)) out.fail("lower_blocks_zero", where);
          const std::size_t killed = std::min(j - 1, ab.s_p0);
          if (!zero_region(0, n, v0_col, v0_col + killed)) out.fail("annihilated_columns", where);
          if (!zero_region(rk, r1, 0, n)) out.fail("row_support", where);
          for (std::size_t i = 1; i <= r1; ++i) {
            std::size_t h = 1;
            while (h < p && i <= r_at(h + 1)) ++h;
            if (!zero_region(r_at(k + h), r1, i - 1, i)) {
              out.fail("staircase", where + ", column " + std::to_string(i));
              break;
            }
          }
          if (k >= p0 && !zero_region(0, r1, 0, r1)) out.fail("central_block_zero", where);
        }
        report.entries.push_back({k, j, b, m});
      }
      if (j == 1 && !first_columns.empty() &&
          rank(Matrix::from_rows(first_columns)) != first_columns.size())
        out.fail("first_column_injective", cell(k, 1) + ": X -> X(v_1) is not injective");
    }
  }
  report.report = out.take();
  return report;
}

Profile extract_profile(const Decomposition& dec, const OperatorChain& chain, std::size_t p0) {
  const std::size_t p = chain.depth();
  const auto r = dec.column_dims();
  const auto dim_v = static_cast<std::int64_t>(chain.space_dim());
  Profile a(p + 1);
  a[0] = dim_v - static_cast<std::int64_t>(r[0]);
  for (std::size_t h = 1; h < p; ++h) a[h] = static_cast<std::int64_t>(r[h - 1] - r[h]);
  a[p] = static_cast<std::int64_t>(r[p - 1]);
  if (a[0] < 1 || a[p] < 1) throw InvariantError("extracted profile violates a_0, a_p >= 1");
  if (std::accumulate(a.begin(), a.end(), std::int64_t{0}) != dim_v)
    throw InvariantError("extracted profile does not sum to dim V");
  std::vector<std::int64_t> dims;
  for (const auto& level : chain.levels()) dims.push_back(static_cast<std::int64_t>(level.dim()));
  if (!is_feasible(make_bound_problem(p0, dims), a))
    throw InvariantError("extracted profile is infeasible for its bound problem");
  return a;
}

bool DecompositionRun::ok() const {
  return failure.empty() && decomposition_checks.ok() && block_report && block_report->ok() &&
         profile.has_value();
}

DecompositionRun run_decomposition(const Representation& rep, const Filtration& filt,
                                   std::uint64_t seed) {
  Decomposition dec = decompose(rep, filt, seed);
  DecompositionRun run{OperatorChain::from_representation(rep, filt), std::move(dec), {}, {}, {}, {}, {}};
  const std::size_t p0 = filt.p0();
  run.decomposition_checks = verify_decomposition(run.decomposition, run.chain, p0);
  if (!run.decomposition_checks.ok()) {
    run.failure = "decomposition verification failed";
    return run;
  }
  try {
    run.adapted_basis = build_adapted_basis(run.decomposition, run.chain, p0);
    run.block_report = verify_block_structure(*run.adapted_basis, run.decomposition, run.chain, p0);
    if (!run.block_report->ok()) run.failure = "block structure verification failed";
    run.profile = extract_profile(run.decomposition, run.chain, p0);
  } catch (const InvariantError& e) {
    run.failure = e.what();
  }
  return run;
}

}  // namespace nilrep

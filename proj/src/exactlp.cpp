#include "fos/exactlp.hpp"

#include "fos/errors.hpp"
#include "fos/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <string>

namespace fos {

Rat LpRow::activity(std::span<const Rat> x) const {
  Rat total = 0;
  for (const auto& [j, a] : coeffs) total += a * x[j];
  return total;
}

bool LpRow::satisfied_by(std::span<const Rat> x) const {
  const Rat act = activity(x);
  switch (sense) {
    case Sense::Ge:
      return act >= rhs;
    case Sense::Le:
      return act <= rhs;
    case Sense::Eq:
      return act == rhs;
  }
  return false;
}

int LpProblem::add_var(std::string name, Rat lower, Rat upper, Rat cost) {
  vars.push_back({std::move(name), std::move(lower), std::move(upper), std::move(cost)});
  return static_cast<int>(vars.size()) - 1;
}

namespace {

// Dense tableau in equality form: a·z = b with one basic column per row.
// `obj` holds reduced costs and `obj_rhs` holds minus the current objective.
struct Tableau {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<int> basis;
  std::vector<Rat> obj;
  Rat obj_rhs;

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return obj.size(); }

  void pivot(std::size_t r, std::size_t c) {
    std::vector<Rat>& prow = a[r];
    const Rat lead = prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < prow.size(); ++j) {
      if (prow[j] != 0) {
        prow[j] /= lead;
        nz.push_back(j);
      }
    }
    b[r] /= lead;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat factor = a[i][c];
      for (std::size_t j : nz) a[i][j] -= factor * prow[j];
      b[i] -= factor * b[r];
    }
    if (obj[c] != 0) {
      const Rat factor = obj[c];
      for (std::size_t j : nz) obj[j] -= factor * prow[j];
      obj_rhs -= factor * b[r];
    }
    basis[r] = static_cast<int>(c);
  }

  // Bland's rule: lowest-index improving column enters; ratio ties go to the
  // lowest-index basic column. Returns false on unboundedness.
  bool optimize(const std::vector<char>& allowed) {
    while (true) {
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols(); ++j) {
        if (allowed[j] && obj[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols()) return true;
      std::size_t leave = rows();
      Rat best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = b[i] / a[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  void erase_row(std::size_t r) {
    a.erase(a.begin() + static_cast<long>(r));
    b.erase(b.begin() + static_cast<long>(r));
    basis.erase(basis.begin() + static_cast<long>(r));
  }
};

// Origin of a tableau row.
struct RowOrigin {
  bool upper = false;  // true: bound row of variable `index`; false: LP row `index`
  int index = 0;
  Rat sign = 1;        // multiplier applied to make the right side nonnegative
  int initial_col = 0;
};

}  // namespace

LpResult solve_basic(const LpProblem& p) {
  const int nv = static_cast<int>(p.vars.size());
  const int nr = static_cast<int>(p.rows.size());

  for (int j = 0; j < nv; ++j) {
    if (p.vars[j].upper < p.vars[j].lower) {
      FarkasCertificate cert;
      cert.row_multipliers.assign(nr, 0);
      cert.lower_multipliers.assign(nv, 0);
      cert.upper_multipliers.assign(nv, 0);
      cert.lower_multipliers[j] = 1;
      cert.upper_multipliers[j] = 1;
      return Infeasible{std::move(cert)};
    }
  }

  // Column layout: z (shifted structurals) | slacks | upper-bound slacks | artificials.
  std::vector<int> slack_col(nr, -1);
  int ncols = nv;
  for (int i = 0; i < nr; ++i) {
    if (p.rows[i].sense != Sense::Eq) slack_col[i] = ncols++;
  }
  const int upper_base = ncols;
  ncols += nv;

  Tableau t;
  std::vector<RowOrigin> origin;
  std::vector<std::vector<Rat>> rows;
  std::vector<char> needs_art;

  for (int i = 0; i < nr; ++i) {
    const LpRow& row = p.rows[i];
    std::vector<Rat> r(ncols, 0);
    Rat d = row.rhs;
    for (const auto& [j, coef] : row.coeffs) {
      if (j < 0 || j >= nv) throw InputError("LP row references an unknown variable");
      r[j] += coef;
      d -= coef * p.vars[j].lower;
    }
    if (row.sense == Sense::Ge) r[slack_col[i]] = -1;
    if (row.sense == Sense::Le) r[slack_col[i]] = 1;
    RowOrigin o{false, i, 1, -1};
    if (d < 0) {
      o.sign = -1;
      for (Rat& x : r) x = -x;
      d = -d;
    }
    const bool slack_basic = slack_col[i] >= 0 && r[slack_col[i]] == 1;
    if (slack_basic) o.initial_col = slack_col[i];
    needs_art.push_back(!slack_basic);
    rows.push_back(std::move(r));
    t.b.push_back(std::move(d));
    origin.push_back(o);
  }
  for (int j = 0; j < nv; ++j) {
    std::vector<Rat> r(ncols, 0);
    r[j] = 1;
    r[upper_base + j] = 1;
    rows.push_back(std::move(r));
    t.b.push_back(p.vars[j].upper - p.vars[j].lower);
    origin.push_back({true, j, 1, upper_base + j});
    needs_art.push_back(false);
  }

  const int art_base = ncols;
  int nart = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (needs_art[i]) origin[i].initial_col = art_base + nart++;
  }
  const int total_cols = art_base + nart;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].resize(total_cols, 0);
    if (needs_art[i]) rows[i][origin[i].initial_col] = 1;
    t.basis.push_back(origin[i].initial_col);
  }
  t.a = std::move(rows);

  // Phase I: minimize the sum of artificials.
  std::vector<Rat> phase1_cost(total_cols, 0);
  for (int c = art_base; c < total_cols; ++c) phase1_cost[c] = 1;
  t.obj = phase1_cost;
  t.obj_rhs = 0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (!needs_art[i]) continue;
    for (int j = 0; j < total_cols; ++j) {
      if (t.a[i][j] != 0) t.obj[j] -= t.a[i][j];
    }
    t.obj_rhs -= t.b[i];
  }
  std::vector<char> allowed(total_cols, 1);
  if (!t.optimize(allowed)) throw ContractViolation("phase I reported unbounded");

  if (-t.obj_rhs > 0) {
    // Duals from the initial identity columns: π_i = c_col − r_col.
    FarkasCertificate cert;
    cert.row_multipliers.assign(nr, 0);
    cert.lower_multipliers.assign(nv, 0);
    cert.upper_multipliers.assign(nv, 0);
    for (const RowOrigin& o : origin) {
      const Rat pi = phase1_cost[o.initial_col] - t.obj[o.initial_col];
      if (o.upper) {
        cert.upper_multipliers[o.index] = -pi * o.sign;
      } else {
        cert.row_multipliers[o.index] = pi * o.sign;
      }
    }
    std::vector<Rat> combo(nv, 0);
    for (int i = 0; i < nr; ++i) {
      for (const auto& [j, coef] : p.rows[i].coeffs) combo[j] += cert.row_multipliers[i] * coef;
    }
    for (int j = 0; j < nv; ++j) cert.lower_multipliers[j] = -(combo[j] - cert.upper_multipliers[j]);
    if (!verify_certificate(p, cert)) throw ContractViolation("phase I produced an invalid infeasibility certificate");
    return Infeasible{std::move(cert)};
  }

  // Drive artificials out of the basis; rows where that is impossible are
  // linearly dependent equality rows and get dropped.
  std::vector<char> eq_row_dropped(nr, 0);
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis[i] < art_base) {
      ++i;
      continue;
    }
    int col = -1;
    for (int j = 0; j < art_base; ++j) {
      if (t.a[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      t.pivot(i, static_cast<std::size_t>(col));
      ++i;
    } else {
      require_contract(!origin[i].upper && p.rows[origin[i].index].sense == Sense::Eq,
                       "simplex: dependent inequality row");
      eq_row_dropped[origin[i].index] = 1;
      t.erase_row(i);
      origin.erase(origin.begin() + static_cast<long>(i));
    }
  }
  for (int c = art_base; c < total_cols; ++c) allowed[c] = 0;

  // Phase II.
  std::vector<Rat> cost(total_cols, 0);
  for (int j = 0; j < nv; ++j) cost[j] = p.vars[j].cost;
  t.obj = cost;
  t.obj_rhs = 0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const Rat cb = cost[t.basis[i]];
    if (cb == 0) continue;
    for (int j = 0; j < total_cols; ++j) {
      if (t.a[i][j] != 0) t.obj[j] -= cb * t.a[i][j];
    }
    t.obj_rhs -= cb * t.b[i];
  }
  if (!t.optimize(allowed)) throw ContractViolation("simplex: bounded LP reported unbounded");

  BasicSolution sol;
  sol.values.assign(nv, 0);
  std::vector<char> is_basic(total_cols, 0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    is_basic[t.basis[i]] = 1;
    if (t.basis[i] < nv) sol.values[t.basis[i]] = t.b[i];
  }
  for (int j = 0; j < nv; ++j) {
    sol.values[j] += p.vars[j].lower;
    sol.objective += p.vars[j].cost * sol.values[j];
  }
  for (int i = 0; i < nr; ++i) {
    const bool eq_active = p.rows[i].sense == Sense::Eq && !eq_row_dropped[i];
    const bool slack_active = slack_col[i] >= 0 && !is_basic[slack_col[i]];
    if (eq_active || slack_active) sol.basis.push_back({ActiveConstraint::Kind::Row, i});
  }
  for (int j = 0; j < nv; ++j) {
    if (!is_basic[j]) sol.basis.push_back({ActiveConstraint::Kind::Lower, j});
  }
  for (int j = 0; j < nv; ++j) {
    if (!is_basic[upper_base + j]) sol.basis.push_back({ActiveConstraint::Kind::Upper, j});
  }
  require_contract(static_cast<int>(sol.basis.size()) == nv, "simplex: basis descriptor has wrong size");
  return sol;
}

bool verify_certificate(const LpProblem& p, const FarkasCertificate& cert) {
  const std::size_t nv = p.vars.size();
  if (cert.row_multipliers.size() != p.rows.size() || cert.lower_multipliers.size() != nv ||
      cert.upper_multipliers.size() != nv) {
    return false;
  }
  std::vector<Rat> combo(nv, 0);
  Rat rhs = 0;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const Rat& lam = cert.row_multipliers[i];
    if (p.rows[i].sense == Sense::Ge && lam < 0) return false;
    if (p.rows[i].sense == Sense::Le && lam > 0) return false;
    for (const auto& [j, coef] : p.rows[i].coeffs) combo[j] += lam * coef;
    rhs += lam * p.rows[i].rhs;
  }
  for (std::size_t j = 0; j < nv; ++j) {
    if (cert.lower_multipliers[j] < 0 || cert.upper_multipliers[j] < 0) return false;
    combo[j] += cert.lower_multipliers[j] - cert.upper_multipliers[j];
    rhs += cert.lower_multipliers[j] * p.vars[j].lower - cert.upper_multipliers[j] * p.vars[j].upper;
    if (combo[j] != 0) return false;
  }
  return rhs > 0;
}

bool is_feasible(const LpProblem& p, std::span<const Rat> x) {
  if (x.size() != p.vars.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < p.vars[j].lower || x[j] > p.vars[j].upper) return false;
  }
  return std::all_of(p.rows.begin(), p.rows.end(), [&](const LpRow& r) { return r.satisfied_by(x); });
}

std::vector<ActiveConstraint> active_constraints(const LpProblem& p, std::span<const Rat> x) {
  std::vector<ActiveConstraint> out;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (p.rows[i].activity(x) == p.rows[i].rhs) out.push_back({ActiveConstraint::Kind::Row, static_cast<int>(i)});
  }
  for (std::size_t j = 0; j < p.vars.size(); ++j) {
    if (x[j] == p.vars[j].lower) out.push_back({ActiveConstraint::Kind::Lower, static_cast<int>(j)});
  }
  for (std::size_t j = 0; j < p.vars.size(); ++j) {
    if (x[j] == p.vars[j].upper) out.push_back({ActiveConstraint::Kind::Upper, static_cast<int>(j)});
  }
  return out;
}

std::vector<Rat> constraint_vector(const LpProblem& p, const ActiveConstraint& c) {
  std::vector<Rat> v(p.vars.size(), 0);
  if (c.kind == ActiveConstraint::Kind::Row) {
    for (const auto& [j, coef] : p.rows[c.index].coeffs) v[j] += coef;
  } else {
    v[c.index] = 1;
  }
  return v;
}

bool is_vertex(const LpProblem& p, std::span<const Rat> x) {
  if (!is_feasible(p, x)) return false;
  RowSpace space(p.vars.size());
  for (const auto& c : active_constraints(p, x)) {
    space.add(constraint_vector(p, c));
    if (space.rank() == p.vars.size()) return true;
  }
  return space.rank() == p.vars.size();
}

namespace {

std::string row_signature(const LpRow& r) {
  std::string key = r.sense == Sense::Ge ? ">=" : (r.sense == Sense::Le ? "<=" : "=");
  key += to_string(r.rhs);
  for (const auto& [j, c] : r.coeffs) key += ";" + std::to_string(j) + ":" + to_string(c);
  return key;
}

}  // namespace

LpResult solve_with_separation(const LpProblem& base, const Separator& sep, SeparationLoopStats* stats,
                               LpProblem* final_problem) {
  LpProblem current = base;
  std::set<std::string> keys;
  for (const LpRow& r : current.rows) keys.insert(r.key.empty() ? row_signature(r) : r.key);
  SeparationLoopStats local;
  while (true) {
    ++local.rounds;
    LpResult res = solve_basic(current);
    if (std::holds_alternative<Infeasible>(res)) {
      if (stats) *stats = local;
      if (final_problem) *final_problem = std::move(current);
      return res;
    }
    const auto& sol = std::get<BasicSolution>(res);
    std::vector<LpRow> cuts = sep(sol.values);
    if (cuts.empty()) {
      if (stats) *stats = local;
      if (final_problem) *final_problem = std::move(current);
      return res;
    }
    int added = 0;
    for (LpRow& r : cuts) {
      std::string key = r.key.empty() ? row_signature(r) : r.key;
      if (keys.insert(key).second) {
        current.add_row(std::move(r));
        ++added;
      }
    }
    require_contract(added > 0, "separator returned only rows already in the LP");
    local.rows_added += added;
  }
}

namespace {

// Integer multiple of the row so every coefficient is integral (LP format has no fractions).
mpz_class row_scale(const LpRow& r) {
  std::vector<Rat> vals{r.rhs};
  for (const auto& [j, c] : r.coeffs) vals.push_back(c);
  return common_denominator(vals);
}

void write_terms(std::ostream& out, const std::vector<std::pair<int, Rat>>& terms, const mpz_class& scale,
                 const LpProblem& p) {
  bool first = true;
  for (const auto& [j, c] : terms) {
    Rat v = c * scale;
    if (v == 0) continue;
    out << (v < 0 ? " - " : (first ? " " : " + "));
    Rat mag = abs(v);
    if (mag != 1) out << to_string(mag) << " ";
    out << p.vars[j].name;
    first = false;
  }
  if (first) out << " 0 " << (p.vars.empty() ? "x" : p.vars[0].name);
}

}  // namespace

void write_lp(std::ostream& out, const LpProblem& p) {
  std::vector<std::pair<int, Rat>> obj;
  std::vector<Rat> costs;
  for (std::size_t j = 0; j < p.vars.size(); ++j) {
    obj.emplace_back(static_cast<int>(j), p.vars[j].cost);
    costs.push_back(p.vars[j].cost);
  }
  const mpz_class obj_scale = common_denominator(costs);
  out << "\\ exact rational LP; every row is scaled by a positive integer to clear denominators\n";
  out << "\\ objective scale factor: " << obj_scale.get_str() << "\n";
  out << "Minimize\n obj:";
  write_terms(out, obj, obj_scale, p);
  out << "\nSubject To\n";
  int anon = 0;
  auto emit = [&](const LpRow& r, const std::string& name) {
    const mpz_class scale = row_scale(r);
    out << " " << name << ":";
    write_terms(out, r.coeffs, scale, p);
    out << (r.sense == Sense::Ge ? " >= " : (r.sense == Sense::Le ? " <= " : " = ")) << to_string(r.rhs * scale)
        << "\n";
  };
  for (const LpRow& r : p.rows) emit(r, r.key.empty() ? "r" + std::to_string(anon++) : r.key);
  // Fractional bounds become scaled rows.
  for (std::size_t j = 0; j < p.vars.size(); ++j) {
    for (int side = 0; side < 2; ++side) {
      const Rat& bound = side == 0 ? p.vars[j].lower : p.vars[j].upper;
      if (is_integral(bound)) continue;
      LpRow r;
      r.coeffs = {{static_cast<int>(j), Rat(1)}};
      r.sense = side == 0 ? Sense::Ge : Sense::Le;
      r.rhs = bound;
      emit(r, (side == 0 ? "lb_" : "ub_") + p.vars[j].name);
    }
  }
  out << "Bounds\n";
  for (const LpVariable& v : p.vars) {
    out << " " << (is_integral(v.lower) ? to_string(v.lower) : std::string("-inf")) << " <= " << v.name
        << " <= " << (is_integral(v.upper) ? to_string(v.upper) : std::string("+inf")) << "\n";
  }
  out << "End\n";
}

}  // namespace fos

#include "reach/postc.hpp"

#include <cmath>

namespace reach {

namespace {

SetPtr input_set(const Dynamics& dyn) {
  if (dyn.deterministic()) {
    return make_point(dyn.fixed_u());
  }
  return std::get<SetInput>(dyn.input).set;
}

double axis_sup(const ConvexSet& s) {
  const int n = s.dim();
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    e(i) = 1.0;
    m = std::max(m, std::max(s.support(e), s.support(-e)));
  }
  return m;
}

SetPtr scale_set(SetPtr s, double k) {
  const int n = s->dim();
  return make_affine_image(Matrix::Identity(n, n) * k, std::move(s),
                           Vector::Zero(n));
}

LocationCache make_location_cache(const Dynamics& dyn, double tau) {
  LocationCache c;
  c.phi = mat_exp(dyn.a, tau);
  c.phi_t = c.phi.transpose();
  SetPtr u = input_set(dyn);
  c.tau_u = scale_set(u, tau);
  c.norm_a = dyn.a.size() > 0 ? dyn.a.cwiseAbs().rowwise().sum().maxCoeff() : 0.0;
  c.sup_u = axis_sup(*u);
  c.remainder =
      c.norm_a > 0.0 ? std::exp(tau * c.norm_a) - 1.0 - tau * c.norm_a : 0.0;
  return c;
}

DiscretizedDynamics assemble_discretization(const LocationCache& c, SetPtr x0) {
  const int n = x0->dim();
  DiscretizedDynamics dd;
  dd.phi = c.phi;
  double alpha = 0.0;
  double beta = 0.0;
  if (c.norm_a > 0.0) {
    const double sup_x0 = axis_sup(*x0);
    alpha = c.remainder * (sup_x0 + c.sup_u / c.norm_a);
    beta = c.remainder * (c.sup_u / c.norm_a);
  }
  const Vector zero = Vector::Zero(n);
  dd.w = make_minkowski_sum(c.tau_u, make_ball(zero, beta));
  SetPtr bloated = make_minkowski_sum(c.tau_u, make_ball(zero, alpha));
  SetPtr reached = make_minkowski_sum(
      make_affine_image(c.phi, x0, zero), std::move(bloated));
  dd.omega0 = make_hull_pair(std::move(x0), std::move(reached));
  return dd;
}

}  // namespace

DiscretizedDynamics discretize(const Dynamics& dyn, SetPtr x0, double tau) {
  if (tau <= 0.0) {
    throw std::invalid_argument("discretize: step must be positive");
  }
  return assemble_discretization(make_location_cache(dyn, tau), std::move(x0));
}

DiscretizationCache build_cache(const HybridAutomaton& ha, double tau) {
  if (tau <= 0.0) {
    throw std::invalid_argument("build_cache: step must be positive");
  }
  DiscretizationCache cache;
  for (const auto& loc : ha.locations) {
    cache.emplace(loc.id, make_location_cache(loc.dynamics, tau));
  }
  return cache;
}

FlowpipePlan::FlowpipePlan(const SymbolicState& s, const HybridAutomaton& ha,
                           const ReachParams& p, const DiscretizationCache* cache)
    : ha_(&ha), p_(&p), loc_(s.loc) {
  const Location& loc = ha.location(s.loc);

  if (cache) {
    dd_ = assemble_discretization(cache->at(s.loc), s.set);
  } else {
    dd_ = discretize(loc.dynamics, s.set, p.step);
  }
  phi_t_ = dd_.phi.transpose();

  emitted_dirs_ = std::make_shared<TemplateDirections>(p.directions);
  for (const auto& h : loc.invariant) {
    emitted_dirs_->dirs.push_back(h.normal);
    inv_offsets_.push_back(h.offset);
  }

  // Longest prefix Omega_0..Omega_j meeting the invariant, by the
  // per-constraint support test along the recurrence.
  const int n_steps = p.steps();
  const auto& inv = loc.invariant;
  if (!satisfies(*s.set, inv)) {
    emit_ = 0;  // start set violates the invariant: empty flowpipe
    return;
  }
  std::vector<Vector> r;
  std::vector<double> acc(inv.size(), 0.0);
  r.reserve(inv.size());
  for (const auto& h : inv) r.push_back(-h.normal);

  for (int i = 0; i < n_steps; ++i) {
    bool ok = true;
    for (size_t c = 0; c < inv.size(); ++c) {
      if (i > 0) {
        acc[c] += dd_.w->support(r[c]);
        r[c] = phi_t_ * r[c];
      }
      const double sup_neg = dd_.omega0->support(r[c]) + acc[c];
      if (-sup_neg > inv[c].offset + kSatTol) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    emit_ = i + 1;
  }
}

std::vector<double> FlowpipePlan::direction_sequence(size_t dir_index) const {
  std::vector<double> seq;
  seq.reserve(emit_);
  if (emit_ == 0) return seq;
  Vector r = p_->directions.dirs.at(dir_index);
  double acc = 0.0;
  seq.push_back(dd_.omega0->support(r));
  for (int i = 1; i < emit_; ++i) {
    acc += dd_.w->support(r);
    r = phi_t_ * r;
    seq.push_back(dd_.omega0->support(r) + acc);
  }
  return seq;
}

Flowpipe FlowpipePlan::assemble(std::vector<std::vector<double>> sequences) const {
  const size_t nd = template_size();
  if (sequences.size() != nd) {
    throw std::invalid_argument("assemble: one sequence per template direction");
  }
  Flowpipe f;
  f.loc = loc_;
  f.dirs = emitted_dirs_;
  f.template_size = nd;
  f.bounds.reserve(emit_);
  for (int i = 0; i < emit_; ++i) {
    std::vector<double> row;
    row.reserve(nd + inv_offsets_.size());
    for (size_t d = 0; d < nd; ++d) {
      row.push_back(sequences[d].at(i));
    }
    row.insert(row.end(), inv_offsets_.begin(), inv_offsets_.end());
    f.bounds.push_back(std::move(row));
  }
  f.support_samples = static_cast<long>(nd) * emit_;
  return f;
}

Flowpipe compute_flowpipe(const SymbolicState& s, const HybridAutomaton& ha,
                          const ReachParams& p, const DiscretizationCache* cache) {
  FlowpipePlan plan(s, ha, p, cache);
  std::vector<std::vector<double>> seqs;
  seqs.reserve(plan.template_size());
  for (size_t d = 0; d < plan.template_size(); ++d) {
    seqs.push_back(plan.direction_sequence(d));
  }
  return plan.assemble(std::move(seqs));
}

std::vector<std::vector<Point2>> flowpipe_template_union(
    const Flowpipe& f, std::pair<int, int> axes) {
  std::vector<std::vector<Point2>> out;
  for (size_t i = 0; i < f.size(); ++i) {
    auto poly = project_vertices_2d(f.omega(i).constraints(), axes);
    if (poly && !poly->empty()) {
      out.push_back(std::move(*poly));
    }
  }
  return out;
}

}  // namespace reach

#include "lsw/gallery.hpp"

#include "lsw/cone.hpp"
#include "lsw/ideal_ops.hpp"
#include "lsw/poly_io.hpp"

namespace lsw {

namespace {

std::vector<Poly> parse_all(const std::vector<std::string>& ss, const VarTable& v) {
  std::vector<Poly> ps;
  for (const auto& s : ss) ps.push_back(parse_poly(s, v));
  return ps;
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"legendrian-line",    "twisted-cubic-cone",   "cusp-curve",
          "cusp-conormal-lift", "rotating-line-family", "quadric-flow-family"};
}

GalleryItem gallery(const std::string& name) {
  GalleryItem item;
  item.name = name;
  if (name == "legendrian-line") {
    item.m = 1;
    item.ideal_gens = parse_all({"x2", "x3"}, VarTable::x(3));
    item.parametrization = parse_all({"u1", "0", "0"}, VarTable::u(1));
    item.expected_classification = "lagrangian-cone-singularity";
    item.expected_smooth_at_origin = true;
    return item;
  }
  if (name == "twisted-cubic-cone") {
    item.m = 2;
    item.ideal_gens = parse_all(
        {"x2^2 + 9*x1*x4", "3*x1*x3 + x2*x4", "x2*x3 - 3*x4^2", "x5"}, VarTable::x(5));
    item.parametrization =
        parse_all({"u1^3", "3*u1^2*u2", "u2^3", "-u1*u2^2", "0"}, VarTable::u(2));
    item.expected_classification = "lagrangian-cone-singularity";
    item.expected_torsion_nonzero = true;
    item.expected_weight_obstructed = true;
    return item;
  }
  if (name == "cusp-curve") {
    item.m = 1;
    item.ideal_gens = parse_all({"x2^2 - x1^3", "5*x3 + x1*x2"}, VarTable::x(3));
    item.parametrization = parse_all({"u1^2", "u1^3", "-1/5*u1^5"}, VarTable::u(1));
    item.expected_classification = "not-a-cone";
    item.expected_torsion_nonzero = true;
    item.expected_weight_obstructed = true;
    return item;
  }
  if (name == "cusp-conormal-lift") {
    item.m = 1;
    item.ideal_gens = parse_all({"9*x1 - 16*x2^2", "27*x3 - 16*x2^3"}, VarTable::x(3));
    item.parametrization = parse_all({"u1^2", "-3/4*u1", "-1/4*u1^3"}, VarTable::u(1));
    item.expected_classification = "lagrangian-cone-singularity";
    item.expected_smooth_at_origin = true;
    return item;
  }
  if (name == "rotating-line-family") {
    item.m = 1;
    item.is_family = true;
    item.parametrization = parse_all({"u1", "t*u1", "0"}, VarTable::ut(1));
    return item;
  }
  if (name == "quadric-flow-family") {
    return gallery_quadric_flow(parse_poly("x1^2", VarTable::x(4)));
  }
  throw std::invalid_argument("unknown gallery item: " + name);
}

GalleryItem gallery_quadric_flow(const Poly& q) {
  const int m = 2;
  const SymplecticSpace V(m);
  if (q.nvars() != V.dim())
    throw std::invalid_argument("quadric-flow-family: q lives in the 2m symplectic variables");
  const VectorField dag = omega_dagger(q, V);

  // matrix of v^q = omega_dagger(q)/2 on the symplectic slice
  QMat A(V.dim(), QVec(V.dim(), Q(0)));
  for (int i = 0; i < V.dim(); ++i) {
    const Poly lin = dag.component(i).homogeneous_part(1);
    for (const auto& [mono, c] : lin.terms())
      for (int j = 0; j < V.dim(); ++j)
        if (mono.exp(j) == 1) A[i][j] = c / Q(2);
  }
  // polynomial flow needs a nilpotent matrix: exp(tA) terminates
  std::vector<QMat> powers{A};
  for (int k = 1; k <= V.dim(); ++k) {
    const QMat& prev = powers.back();
    QMat next(V.dim(), QVec(V.dim(), Q(0)));
    bool zero = true;
    for (int i = 0; i < V.dim(); ++i)
      for (int j = 0; j < V.dim(); ++j) {
        Q s(0);
        for (int l = 0; l < V.dim(); ++l) s += prev[i][l] * A[l][j];
        next[i][j] = s;
        zero = zero && is_zero(s);
      }
    if (zero) break;
    powers.push_back(std::move(next));
    if (k == V.dim())
      throw std::invalid_argument(
          "quadric-flow-family: omega_dagger(q) is not nilpotent, the flow is not polynomial");
  }

  // exp(tA) applied to the twisted cubic parametrization, t exact
  const int pu = m + 1;
  const std::vector<Poly> base =
      parse_all({"u1^3", "3*u1^2*u2", "u2^3", "-u1*u2^2"}, VarTable::u(m));
  std::vector<Poly> lifted;
  for (const Poly& b : base) lifted.push_back(lift(b, pu, 0));

  GalleryItem item;
  item.name = "quadric-flow-family";
  item.m = m;
  item.is_family = true;
  item.quadric = q;
  std::vector<Poly> comps(V.dim(), Poly(pu));
  Q factorial(1);
  Poly tpow = Poly::constant(pu, 1);
  const Poly t = Poly::variable(pu, m);
  QMat coef(V.dim(), QVec(V.dim(), Q(0)));
  for (int i = 0; i < V.dim(); ++i) coef[i][i] = 1;
  for (size_t k = 0;; ++k) {
    for (int i = 0; i < V.dim(); ++i)
      for (int j = 0; j < V.dim(); ++j)
        if (!is_zero(coef[i][j])) comps[i] += lifted[j] * (coef[i][j] / factorial) * tpow;
    if (k >= powers.size()) break;
    coef = powers[k];
    factorial *= Q(static_cast<long>(k) + 1);
    tpow = tpow * t;
  }
  comps.push_back(Poly(pu));  // x_{2m+1} = 0 along the cone family
  item.parametrization = std::move(comps);
  return item;
}

LegendrianParam legendrian_lift(const Poly& x_of_t, const Poly& y_of_t) {
  if (x_of_t.nvars() != 1 || y_of_t.nvars() != 1)
    throw std::invalid_argument("legendrian_lift: expected univariate front components");
  const Poly dx = x_of_t.derivative(0);
  const Poly dy = y_of_t.derivative(0);
  if (dx.is_zero()) throw std::invalid_argument("legendrian_lift: x(t) is constant");
  const auto slope = divide_exact(dy, dx);
  if (!slope)
    throw std::invalid_argument("legendrian_lift: the front slope y'/x' is not polynomial");
  const Poly x2 = -(*slope) / Q(2);
  const Poly x3 = -y_of_t - x_of_t * x2;
  LegendrianParam out(1, {x_of_t, x2, x3});
  if (!legendrian_parametric(out))
    throw std::logic_error("legendrian_lift: pullback check failed");
  return out;
}

}  // namespace lsw

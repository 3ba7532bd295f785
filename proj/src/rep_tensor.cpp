#include "o13/rep_tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace o13 {

namespace {

std::size_t pow4(int n) { return std::size_t(1) << (2 * n); }

// new[.. i_k ..] = sum_a m(i_k, a) old[.. a ..] on index position k
std::vector<double> apply_to_index(const std::vector<double>& c, int rank,
                                   int k, const Mat4& m) {
  const std::size_t stride = pow4(rank - 1 - k);
  const std::size_t blocks = pow4(k);
  std::vector<double> out(c.size(), 0.0);
  for (std::size_t hi = 0; hi < blocks; ++hi) {
    const std::size_t base_hi = hi * stride * 4;
    for (std::size_t lo = 0; lo < stride; ++lo) {
      const std::size_t base = base_hi + lo;
      double in[4];
      for (int a = 0; a < 4; ++a) in[a] = c[base + a * stride];
      for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int a = 0; a < 4; ++a) s += m(i, a) * in[a];
        out[base + i * stride] = s;
      }
    }
  }
  return out;
}

std::vector<double> conjugate_every_index(const std::vector<double>& c,
                                          int rank, const Mat4& m) {
  std::vector<double> out = c;
  for (int k = 0; k < rank; ++k) out = apply_to_index(out, rank, k, m);
  return out;
}

int permutation_sign(int a, int b, int c, int d) {
  const long p = long(b - a) * (c - a) * (d - a) * (c - b) * (d - b) * (d - c);
  return p > 0 ? 1 : (p < 0 ? -1 : 0);
}

}  // namespace

RepTensor::RepTensor() : components_{0.0} {}

RepTensor::RepTensor(std::vector<Variance> variance, K4Charge label,
                     std::vector<double> components, std::string rep_name)
    : variance_(std::move(variance)),
      label_(label),
      components_(std::move(components)),
      rep_name_(std::move(rep_name)) {
  if (variance_.size() > 4)
    throw std::invalid_argument("RepTensor rank is capped at 4");
  if (components_.size() != pow4(rank()))
    throw std::invalid_argument("RepTensor component count must be 4^rank");
}

RepTensor RepTensor::scalar(double value, K4Charge label) {
  return RepTensor({}, label, {value});
}

RepTensor RepTensor::vector4(const Vec4& components, Variance var,
                             K4Charge label, std::string rep_name) {
  return RepTensor({var}, label,
                   {components[0], components[1], components[2], components[3]},
                   std::move(rep_name));
}

double RepTensor::value() const {
  if (rank() != 0) throw std::logic_error("value() requires rank 0");
  return components_[0];
}

double RepTensor::at(const std::vector<int>& idx) const {
  return const_cast<RepTensor*>(this)->at(idx);
}

double& RepTensor::at(const std::vector<int>& idx) {
  if (static_cast<int>(idx.size()) != rank())
    throw std::invalid_argument("index arity does not match rank");
  std::size_t flat = 0;
  for (int v : idx) {
    if (v < 0 || v > 3) throw std::out_of_range("tensor index out of range");
    flat = flat * 4 + static_cast<std::size_t>(v);
  }
  return components_[flat];
}

Vec4 RepTensor::as_vec4() const {
  if (rank() != 1) throw std::logic_error("as_vec4() requires rank 1");
  return {components_[0], components_[1], components_[2], components_[3]};
}

RepTensor RepTensor::operator*(double s) const {
  RepTensor r = *this;
  for (double& v : r.components_) v *= s;
  return r;
}

RepTensor RepTensor::operator-() const { return *this * -1.0; }

RepTensor tensor_product(const RepTensor& a, const RepTensor& b) {
  std::vector<Variance> var = a.variance();
  var.insert(var.end(), b.variance().begin(), b.variance().end());
  std::vector<double> comp;
  comp.reserve(a.components().size() * b.components().size());
  for (double x : a.components())
    for (double y : b.components()) comp.push_back(x * y);
  return RepTensor(std::move(var), mul(a.label(), b.label()), std::move(comp));
}

RepTensor contract(const RepTensor& t, int i, int j) {
  const int n = t.rank();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw std::invalid_argument("contract: invalid index pair");
  if (t.variance()[i] == t.variance()[j])
    throw std::invalid_argument(
        "contract: same-variance pair; raise or lower an index first");
  if (i > j) std::swap(i, j);

  std::vector<Variance> var;
  for (int m = 0; m < n; ++m)
    if (m != i && m != j) var.push_back(t.variance()[m]);

  std::vector<std::size_t> stride(n);
  for (int m = 0; m < n; ++m) stride[m] = pow4(n - 1 - m);

  const int out_rank = n - 2;
  std::vector<double> comp(pow4(out_rank), 0.0);
  std::vector<int> digits(out_rank, 0);
  for (std::size_t f = 0; f < comp.size(); ++f) {
    // decode f into the remaining digits (first index slowest)
    std::size_t rem = f;
    for (int m = out_rank - 1; m >= 0; --m) {
      digits[m] = static_cast<int>(rem & 3);
      rem >>= 2;
    }
    std::size_t base = 0;
    int d = 0;
    for (int m = 0; m < n; ++m) {
      if (m == i || m == j) continue;
      base += stride[m] * static_cast<std::size_t>(digits[d++]);
    }
    double s = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
      s += t.components()[base + k * (stride[i] + stride[j])];
    comp[f] = s;
  }

  RepTensor out(std::move(var), t.label(), std::move(comp));
  return out;
}

RepTensor raise_lower(const RepTensor& t, int i) {
  const int n = t.rank();
  if (i < 0 || i >= n) throw std::invalid_argument("raise_lower: bad index");
  RepTensor out = t;
  std::vector<Variance> var = t.variance();
  var[i] = (var[i] == Variance::up) ? Variance::down : Variance::up;

  const std::size_t stride = pow4(n - 1 - i);
  std::vector<double> comp = t.components();
  for (std::size_t f = 0; f < comp.size(); ++f) {
    const int digit = static_cast<int>((f / stride) & 3);
    if (digit != 0) comp[f] = -comp[f];
  }
  return RepTensor(std::move(var), t.label(), std::move(comp), t.rep_name());
}

RepTensor apply_reflection(const RepTensor& t, K4Charge r) {
  const Mat4 d = defining_reflection(r);
  std::vector<double> comp = conjugate_every_index(t.components(), t.rank(), d);
  const double sign = irrep_sign(t.label(), r);
  for (double& v : comp) v *= sign;
  return RepTensor(t.variance(), t.label(), std::move(comp), t.rep_name());
}

RepTensor transform(const RepTensor& t, const ExtendedElement& e) {
  const Mat4 m = to_matrix(e);
  const Mat4 g = minkowski_metric();
  const Mat4 m_down = g * m * g;  // inverse transpose of a Lorentz matrix

  std::vector<double> comp = t.components();
  for (int k = 0; k < t.rank(); ++k) {
    const Mat4& factor = (t.variance()[k] == Variance::up) ? m : m_down;
    comp = apply_to_index(comp, t.rank(), k, factor);
  }
  const double sign = irrep_sign(t.label(), e.kappa);
  for (double& v : comp) v *= sign;
  return RepTensor(t.variance(), t.label(), std::move(comp), t.rep_name());
}

RepTensor act(const ExtendedElement& e, const RepTensor& v) {
  if (v.rank() != 1) throw std::invalid_argument("act: rank-1 tensor expected");
  return transform(v, e);
}

bool approx_equal(const RepTensor& a, const RepTensor& b, double tol) {
  if (a.rank() != b.rank() || a.variance() != b.variance() ||
      !(a.label() == b.label()))
    return false;
  for (std::size_t f = 0; f < a.components().size(); ++f)
    if (std::fabs(a.components()[f] - b.components()[f]) > tol) return false;
  return true;
}

RepTensor metric_lower() {
  RepTensor g({Variance::down, Variance::down}, k4_one,
              std::vector<double>(16, 0.0));
  g.at({0, 0}) = 1.0;
  g.at({1, 1}) = -1.0;
  g.at({2, 2}) = -1.0;
  g.at({3, 3}) = -1.0;
  return g;
}

RepTensor metric_upper() {
  RepTensor g = metric_lower();
  return RepTensor({Variance::up, Variance::up}, k4_one, g.components());
}

namespace {

std::vector<double> permutation_symbol_components() {
  std::vector<double> comp(256, 0.0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          comp[std::size_t(((a * 4 + b) * 4 + c) * 4 + d)] =
              permutation_sign(a, b, c, d);
  return comp;
}

}  // namespace

RepTensor levi_civita() {
  return RepTensor(std::vector<Variance>(4, Variance::down), k4_pt,
                   permutation_symbol_components());
}

RepTensor levi_civita_upper() {
  return RepTensor(std::vector<Variance>(4, Variance::up), k4_pt,
                   permutation_symbol_components());
}

RepTensor coordinate_vector(double t, const Vec3& x) {
  return RepTensor::vector4({t, x[0], x[1], x[2]}, Variance::up, k4_one,
                            "(1/2,1/2)");
}

RepTensor momentum_vector(double energy, const Vec3& p) {
  return RepTensor::vector4({energy, p[0], p[1], p[2]}, Variance::up, k4_t,
                            "(1/2,1/2)");
}

namespace {

void require_vector_kind(const RepTensor& v, K4Charge label, const char* what) {
  if (v.rank() != 1 || v.variance()[0] != Variance::up ||
      !(v.label() == label))
    throw std::invalid_argument(std::string("expected a rank-1 up tensor of "
                                            "quartet label ") +
                                std::string(charge_name(label)) + " for " +
                                what);
}

}  // namespace

RepTensor angular_momentum(const RepTensor& x, const RepTensor& p) {
  require_vector_kind(x, k4_one, "the coordinate factor");
  require_vector_kind(p, k4_t, "the momentum factor");
  RepTensor m({Variance::up, Variance::up}, mul(x.label(), p.label()),
              std::vector<double>(16, 0.0), "(1,0)+(0,1)");
  const Vec4 xv = x.as_vec4();
  const Vec4 pv = p.as_vec4();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      m.at({a, b}) = xv[a] * pv[b] - xv[b] * pv[a];
  return m;
}

RepTensor faraday(const Vec3& e_field, const Vec3& b_field) {
  RepTensor f({Variance::up, Variance::up}, k4_t,
              std::vector<double>(16, 0.0), "(1,0)+(0,1)");
  for (int i = 0; i < 3; ++i) {
    f.at({0, i + 1}) = -e_field[i];
    f.at({i + 1, 0}) = e_field[i];
  }
  f.at({1, 2}) = -b_field[2];
  f.at({2, 1}) = b_field[2];
  f.at({1, 3}) = b_field[1];
  f.at({3, 1}) = -b_field[1];
  f.at({2, 3}) = -b_field[0];
  f.at({3, 2}) = b_field[0];
  return f;
}

void faraday_fields(const RepTensor& f, Vec3& e_field, Vec3& b_field) {
  if (f.rank() != 2) throw std::invalid_argument("faraday_fields: rank 2");
  for (int i = 0; i < 3; ++i) e_field[i] = f.at({i + 1, 0});
  b_field = {-f.at({2, 3}), f.at({1, 3}), -f.at({1, 2})};
}

RepTensor pauli_lubanski(const RepTensor& m, const RepTensor& p) {
  if (m.rank() != 2 || m.variance()[0] != Variance::up ||
      m.variance()[1] != Variance::up || !(m.label() == k4_t))
    throw std::invalid_argument(
        "pauli_lubanski: rank-2 up-up label-T tensor expected");
  require_vector_kind(p, k4_t, "the momentum factor");

  // W_a = 1/2 eps_{ansr} M^{ns} p^r, then raised to its contravariant
  // components (J.p, E J - p x N)
  RepTensor w = tensor_product(tensor_product(levi_civita(), m), p);
  w = contract(w, 1, 4);
  w = contract(w, 1, 3);
  w = contract(w, 1, 2);
  w = raise_lower(w * 0.5, 0);
  w.set_rep_name("(1/2,1/2)");
  return w;
}

RepTensor hodge_dual(const RepTensor& f) {
  if (f.rank() != 2 || f.variance()[0] != Variance::up ||
      f.variance()[1] != Variance::up)
    throw std::invalid_argument("hodge_dual: rank-2 up-up tensor expected");
  const RepTensor f_down = raise_lower(raise_lower(f, 0), 1);
  RepTensor d = tensor_product(levi_civita_upper(), f_down);
  d = contract(d, 2, 4);
  d = contract(d, 2, 3);
  return d * 0.5;
}

ObserverFields observer_fields(const RepTensor& f, const RepTensor& u) {
  if (f.rank() != 2 || !(f.label() == k4_t))
    throw std::invalid_argument("observer_fields: label-T rank-2 expected");
  require_vector_kind(u, k4_t, "the observer four-velocity");
  const Vec4 uv = u.as_vec4();
  const double norm2 =
      uv[0] * uv[0] - uv[1] * uv[1] - uv[2] * uv[2] - uv[3] * uv[3];
  if (std::fabs(norm2 - 1.0) > 1e-9)
    throw std::invalid_argument("observer_fields: u is not a unit vector");

  const RepTensor u_down = raise_lower(u, 0);
  ObserverFields out{contract(tensor_product(f, u_down), 1, 2),
                     contract(tensor_product(hodge_dual(f), u_down), 1, 2)};
  return out;
}

bool malament_identity_check(const RepTensor& f) {
  if (f.rank() != 2) return false;
  const RepTensor reversed = apply_reflection(f, k4_t);
  // bare defining-parity conjugation, no label sign
  std::vector<double> conj =
      conjugate_every_index(f.components(), 2, spatial_reflection());
  for (std::size_t k = 0; k < conj.size(); ++k)
    if (std::fabs(reversed.components()[k] + conj[k]) > 0.0) return false;
  return true;
}

const std::array<VectorRepKind, 4>& vector_rep_kinds() {
  static const std::array<VectorRepKind, 4> kinds{{
      {'c', "coordinate", +1, +1, k4_one},
      {'m', "momentum", +1, -1, k4_t},
      {'a', "axial", -1, -1, k4_pt},
      {'p', "polarization", -1, +1, k4_p},
  }};
  return kinds;
}

const VectorRepKind& vector_rep_kind(char short_name) {
  for (const VectorRepKind& k : vector_rep_kinds())
    if (k.short_name == short_name) return k;
  throw std::invalid_argument("vector rep kind must be c, m, a or p");
}

ChargeVector kind_charge_vector(const VectorRepKind& kind) {
  const K4Charge time_charge = mul(kind.quartet_label, k4_t);
  const K4Charge space_charge = mul(kind.quartet_label, k4_p);
  return {time_charge, space_charge, space_charge, space_charge};
}

Mat4 reflection_operator(const VectorRepKind& kind, K4Charge r) {
  int sign = 0;
  if (r == k4_p) sign = kind.p_sign;
  else if (r == k4_t) sign = kind.t_sign;
  else
    throw std::invalid_argument("reflection_operator: r must be P or T");
  return defining_reflection(r) * static_cast<double>(sign);
}

std::vector<ChargeVector> enumerate_consistent_vector_reps() {
  std::vector<ChargeVector> survivors;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const K4Charge ca = k4_from_index(a), cb = k4_from_index(b),
                         cc = k4_from_index(c), cd = k4_from_index(d);
          const bool rotation_ok = cb == cc && cc == cd;
          const bool boost_ok = mul(cb, k4_pt) == ca;
          if (rotation_ok && boost_ok) survivors.push_back({ca, cb, cc, cd});
        }

  // order as the kinds table presents them: time charges T, 1, P, PT
  std::vector<ChargeVector> ordered;
  for (const VectorRepKind& kind : vector_rep_kinds()) {
    const ChargeVector want = kind_charge_vector(kind);
    for (const ChargeVector& s : survivors)
      if (s == want) ordered.push_back(s);
  }
  return ordered;
}

std::string serialize_tensor(const RepTensor& t) {
  nlohmann::json j;
  j["rank"] = t.rank();
  std::vector<std::string> var;
  for (Variance v : t.variance())
    var.emplace_back(v == Variance::up ? "up" : "down");
  j["variance"] = var;
  j["label"] = std::string(charge_name(t.label()));
  j["components"] = t.components();
  if (!t.rep_name().empty()) j["rep_name"] = t.rep_name();
  return j.dump();
}

RepTensor deserialize_tensor(std::string_view json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  const int rank = j.at("rank").get<int>();
  std::vector<Variance> var;
  for (const auto& v : j.at("variance")) {
    const std::string s = v.get<std::string>();
    if (s == "up") var.push_back(Variance::up);
    else if (s == "down") var.push_back(Variance::down);
    else throw std::runtime_error("tensor variance must be up or down");
  }
  if (static_cast<int>(var.size()) != rank)
    throw std::runtime_error("tensor rank does not match variance list");
  const auto label = parse_charge_name(j.at("label").get<std::string>());
  if (!label) throw std::runtime_error("unknown tensor label");
  std::vector<double> comp = j.at("components").get<std::vector<double>>();
  std::string name = j.value("rep_name", "");
  return RepTensor(std::move(var), *label, std::move(comp), std::move(name));
}

}  // namespace o13

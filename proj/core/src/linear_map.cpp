#include "homnambu/linear_map.hpp"

#include "homnambu/errors.hpp"

namespace homnambu {

namespace {

void require_same_space(const GradedLinearMap& f, const GradedLinearMap& g) {
  if (!(f.space() == g.space())) throw InputError("linear maps act on different spaces");
}

}  // namespace

GradedLinearMap::GradedLinearMap(SuperSpace space, Parity parity, Matrix matrix)
    : space_(std::move(space)), parity_(parity), m_(std::move(matrix)) {
  if (m_.rows() != space_.dim() || m_.cols() != space_.dim())
    throw InputError("map matrix must be " + std::to_string(space_.dim()) + "x" +
                     std::to_string(space_.dim()));
  check_grading();
  index_columns();
}

GradedLinearMap::GradedLinearMap(SuperSpace space, Parity parity, const std::vector<Element>& images)
    : space_(std::move(space)), parity_(parity), m_(space_.dim(), space_.dim()) {
  if (images.size() != space_.dim()) throw InputError("one image per basis vector required");
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].dim() != space_.dim()) throw InputError("image has wrong dimension");
    for (std::size_t i = 0; i < space_.dim(); ++i) m_(i, j) = images[j][i];
  }
  check_grading();
  index_columns();
}

void GradedLinearMap::check_grading() const {
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!m_(i, j).is_zero() && space_.parity(i) != space_.parity(j) + parity_)
        throw InputError("map declared with parity " + std::to_string(parity_.value()) +
                         " sends " + space_.label(j) + " onto " + space_.label(i));
    }
}

void GradedLinearMap::index_columns() {
  cols_.assign(dim(), {});
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!m_(i, j).is_zero()) cols_[j].push_back({i, m_(i, j)});
    }
}

GradedLinearMap GradedLinearMap::identity(const SuperSpace& space) {
  return GradedLinearMap(space, kEven, Matrix::identity(space.dim()));
}

GradedLinearMap GradedLinearMap::zero(const SuperSpace& space, Parity parity) {
  return GradedLinearMap(space, parity, Matrix(space.dim(), space.dim()));
}

GradedLinearMap GradedLinearMap::diagonal(const SuperSpace& space, const std::vector<Scalar>& diag) {
  if (diag.size() != space.dim()) throw InputError("diagonal length mismatch");
  Matrix m(space.dim(), space.dim());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return GradedLinearMap(space, kEven, std::move(m));
}

Element GradedLinearMap::apply(const Element& x) const {
  if (x.dim() != dim()) throw InputError("element dimension mismatch");
  Element y(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& t : cols_[j]) y[t.index].add_product(t.coeff, x[j]);
  }
  return y;
}

Element GradedLinearMap::column(std::size_t j) const {
  Element e(dim());
  for (const auto& t : cols_.at(j)) e[t.index] = t.coeff;
  return e;
}

bool GradedLinearMap::is_zero() const {
  for (const auto& c : cols_) {
    if (!c.empty()) return false;
  }
  return true;
}

bool GradedLinearMap::is_identity() const { return parity_ == kEven && m_ == Matrix::identity(dim()); }

GradedLinearMap GradedLinearMap::operator+(const GradedLinearMap& o) const {
  require_same_space(*this, o);
  if (parity_ != o.parity_) throw InputError("adding maps of different parity");
  Matrix m = m_;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) m(i, j) += o.m_(i, j);
  return GradedLinearMap(space_, parity_, std::move(m));
}

GradedLinearMap GradedLinearMap::operator-(const GradedLinearMap& o) const {
  return *this + Scalar(-1) * o;
}

GradedLinearMap operator*(const Scalar& s, const GradedLinearMap& f) {
  Matrix m = f.m_;
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j) m(i, j) *= s;
  return GradedLinearMap(f.space_, f.parity_, std::move(m));
}

bool operator==(const GradedLinearMap& a, const GradedLinearMap& b) {
  return a.space_ == b.space_ && a.parity_ == b.parity_ && a.m_ == b.m_;
}

std::string GradedLinearMap::format() const {
  std::string s;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (j) s += ", ";
    s += space_.label(j) + " -> " + column(j).format(space_);
  }
  return s;
}

GradedLinearMap map_compose(const GradedLinearMap& f, const GradedLinearMap& g) {
  require_same_space(f, g);
  return GradedLinearMap(f.space(), f.parity() + g.parity(), f.matrix() * g.matrix());
}

GradedLinearMap map_power(const GradedLinearMap& f, unsigned k) {
  GradedLinearMap result = GradedLinearMap::identity(f.space());
  for (unsigned i = 0; i < k; ++i) result = map_compose(result, f);
  return result;
}

GradedLinearMap supercommutator_maps(const GradedLinearMap& d, const GradedLinearMap& dp) {
  require_same_space(d, dp);
  const Scalar s = sign_of((d.parity() * dp.parity()).value());
  Matrix a = map_compose(d, dp).matrix();
  const Matrix b = map_compose(dp, d).matrix();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= s * b(i, j);
  return GradedLinearMap(d.space(), d.parity() + dp.parity(), std::move(a));
}

GradedLinearMap map_inverse(const GradedLinearMap& f) {
  return GradedLinearMap(f.space(), f.parity(), inverse(f.matrix()));
}

}  // namespace homnambu

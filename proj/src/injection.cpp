#include "schurlc/injection.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurlc/errors.hpp"
#include "schurlc/logconcavity.hpp"
#include "schurlc/lr.hpp"

namespace schurlc {

namespace {

Partition term(const Partition& lambda, int k, int j, int m) {
  auto p = theorem1_term(lambda, k, j, m);
  if (!p) throw InvalidFamilyPoint("theorem 1 term is not a partition");
  return *p;
}

bool matches_content(const Tableau& t, const Partition& weight) {
  auto c = content(t);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c == weight.parts();
}

// Builds the image filling of shape theta/mu. Cells of theta/rho copy T.
Tableau fill_image(const Tableau& t, const InjectionPoint& pt,
                   const InjectionShapes& sh) {
  const SkewShape shape(pt.theta, sh.mu);
  std::vector<std::vector<int>> rows(
      static_cast<std::size_t>(pt.theta.length()));
  for (int r = 1; r <= pt.theta.length(); ++r)
    rows[static_cast<std::size_t>(r - 1)].assign(
        static_cast<std::size_t>(pt.theta.part(r) - sh.mu.part(r)), 0);
  Tableau image(shape, std::move(rows));
  for (int r = 1; r <= pt.theta.length(); ++r)
    for (int c = sh.rho.part(r) + 1; c <= pt.theta.part(r); ++c)
      image.set(Cell{r, c}, t.at(Cell{r, c}));
  for (int c = sh.mu.part(1) + 1; c <= sh.rho.part(1); ++c)
    image.set(Cell{1, c}, 1);
  const int first_star =
      pt.lambda.length() + (pt.n - 1) * pt.j + 1;
  const int mu_len = sh.mu.length();
  for (int r = mu_len + 1; r <= sh.rho.length(); ++r)
    image.set(Cell{r, 1}, first_star + (r - mu_len - 1));
  return image;
}

InjectionShapes checked_shapes(const InjectionPoint& pt) {
  InjectionShapes sh = injection_shapes(pt.lambda, pt.k, pt.j, pt.n, pt.i);
  if (sh.rho.part(1) - sh.mu.part(1) != pt.k)
    throw std::logic_error("rho_1 - mu_1 != k");
  if (sh.rho.length() - sh.mu.length() != pt.j)
    throw std::logic_error("rho'_1 - mu'_1 != j");
  return sh;
}

void validate_input(const Tableau& t, const InjectionPoint& pt,
                    const InjectionShapes& sh) {
  if (!(t.shape() == SkewShape(pt.theta, sh.rho)))
    throw NotLRInput("tableau shape is not theta/rho");
  if (!is_semistandard(t)) throw NotLRInput("tableau is not semistandard");
  if (!matches_content(t, sh.delta))
    throw NotLRInput("tableau content is not delta");
  if (!is_yamanouchi(reverse_reading_word(t)))
    throw NotLRInput("reverse reading word is not Yamanouchi");
}

}  // namespace

InjectionShapes injection_shapes(const Partition& lambda, int k, int j, int n,
                                 int i) {
  if (n < 1 || i < 0 || k < 0 || j < 0)
    throw InvalidFamilyPoint("injection point needs n >= 1 and i, k, j >= 0");
  return InjectionShapes{term(lambda, k, j, n + i), term(lambda, k, j, n),
                         term(lambda, k, j, n + i + 1),
                         term(lambda, k, j, n - 1)};
}

Tableau inject_unchecked(const Tableau& t, const InjectionPoint& pt) {
  const InjectionShapes sh = checked_shapes(pt);
  validate_input(t, pt, sh);
  return fill_image(t, pt, sh);
}

Tableau inject(const Tableau& t, const InjectionPoint& pt) {
  Tableau image = inject_unchecked(t, pt);
  if (!is_semistandard(image))
    throw InternalNonSemistandard("image is not semistandard: " +
                                  to_string(image));
  return image;
}

Tableau uninject(const Tableau& image, const InjectionPoint& pt) {
  const InjectionShapes sh = checked_shapes(pt);
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= pt.theta.length(); ++r) {
    std::vector<int> row;
    for (int c = sh.rho.part(r) + 1; c <= pt.theta.part(r); ++c)
      row.push_back(image.at(Cell{r, c}));
    rows.push_back(std::move(row));
  }
  return Tableau(SkewShape(pt.theta, sh.rho), std::move(rows));
}

InjectionReport verify_injection(const Partition& lambda, int k, int j, int n,
                                 int i) {
  InjectionReport report;
  report.hypotheses_hold = theorem1_hypotheses(lambda, k, j);
  report.shapes = injection_shapes(lambda, k, j, n, i);
  const InjectionShapes& sh = report.shapes;
  const SchurExpansion support = schur_product_expand(sh.rho, sh.delta);
  for (const auto& [theta, coeff] : support.terms()) {
    const auto fail = [&](const char* kind, std::string detail) {
      report.failures.push_back(InjectionFailure{theta, kind, std::move(detail)});
    };
    const InjectionPoint pt{lambda, k, j, n, i, theta};
    const auto source = lr_tableaux(sh.rho, sh.delta, theta);
    auto target = lr_tableaux(sh.mu, sh.nu, theta);
    std::sort(target.begin(), target.end());
    const Integer target_coeff = lr_coefficient(sh.mu, sh.nu, theta);
    report.thetas.push_back(
        InjectionTheta{theta, Integer(source.size()), Integer(target.size())});
    if (Integer(source.size()) != coeff)
      fail("count", "|LR(rho,delta)| = " + std::to_string(source.size()) +
                        " but c = " + to_string(coeff));
    if (Integer(target.size()) != target_coeff)
      fail("count", "|LR(mu,nu)| = " + std::to_string(target.size()) +
                        " but c = " + to_string(target_coeff));
    if (source.size() > target.size())
      fail("count", "more source than target tableaux");

    std::vector<Tableau> images;
    for (const Tableau& t : source) {
      ++report.tableaux;
      const Tableau image = inject_unchecked(t, pt);
      const std::string shown = to_string(t) + " -> " + to_string(image);
      if (!(image.shape() == SkewShape(theta, sh.mu))) fail("shape", shown);
      if (!is_semistandard(image)) fail("semistandard", shown);
      if (!matches_content(image, sh.nu)) fail("content", shown);
      if (!is_yamanouchi(reverse_reading_word(image)))
        fail("yamanouchi", shown);
      if (!(uninject(image, pt) == t)) fail("left_inverse", shown);
      if (!std::binary_search(target.begin(), target.end(), image) &&
          is_semistandard(image))
        fail("membership", shown);
      images.push_back(image);
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      fail("injective", "two tableaux share an image");
  }
  return report;
}

}  // namespace schurlc

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "halo/testbed.hpp"

namespace halo {
namespace {

using std::numbers::pi;

// Optima below were refined numerically and are re-checked by the testbed
// oracle test (dense random probe plus local refinement).

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double rastrigin(std::span<const double> x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v);
  return s;
}

double ackley(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank(std::span<const double> x) {
  double s = 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i] / 4000.0;
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return 1.0 + s - p;
}

double styblinski_tang(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v * v * v - 16.0 * v * v + 5.0 * v;
  return 0.5 * s;
}

double michalewicz(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / pi);
    s -= std::sin(x[i]) * std::pow(t, 20);
  }
  return s;
}

double dixon_price(std::span<const double> x) {
  double s = (x[0] - 1.0) * (x[0] - 1.0);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double t = 2.0 * x[i] * x[i] - x[i - 1];
    s += static_cast<double>(i + 1) * t * t;
  }
  return s;
}

double beale(std::span<const double> x) {
  const double a = 1.5 - x[0] + x[0] * x[1];
  const double b = 2.25 - x[0] + x[0] * x[1] * x[1];
  const double c = 2.625 - x[0] + x[0] * x[1] * x[1] * x[1];
  return a * a + b * b + c * c;
}

double branin(std::span<const double> x) {
  const double b = 5.1 / (4.0 * pi * pi);
  const double c = 5.0 / pi;
  const double t = 1.0 / (8.0 * pi);
  const double q = x[1] - b * x[0] * x[0] + c * x[0] - 6.0;
  return q * q + 10.0 * (1.0 - t) * std::cos(x[0]) + 10.0;
}

double eggholder(std::span<const double> x) {
  const double a = x[1] + 47.0;
  return -a * std::sin(std::sqrt(std::abs(x[0] / 2.0 + a))) - x[0] * std::sin(std::sqrt(std::abs(x[0] - a)));
}

double adjiman(std::span<const double> x) { return std::cos(x[0]) * std::sin(x[1]) - x[0] / (x[1] * x[1] + 1.0); }

constexpr std::array<double, 4> kHartmannAlpha{1.0, 1.2, 3.0, 3.2};

double hartmann3(std::span<const double> x) {
  static constexpr double a[4][3] = {{3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}};
  static constexpr double p[4][3] = {
      {0.3689, 0.1170, 0.2673}, {0.4699, 0.4387, 0.7470}, {0.1091, 0.8732, 0.5547}, {0.0381, 0.5743, 0.8828}};
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double e = 0.0;
    for (std::size_t j = 0; j < 3; ++j) e += a[i][j] * (x[j] - p[i][j]) * (x[j] - p[i][j]);
    s -= kHartmannAlpha[i] * std::exp(-e);
  }
  return s;
}

double hartmann6(std::span<const double> x) {
  static constexpr double a[4][6] = {{10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
                                     {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
                                     {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
                                     {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}};
  static constexpr double p[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                     {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                     {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
                                     {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double e = 0.0;
    for (std::size_t j = 0; j < 6; ++j) e += a[i][j] * (x[j] - p[i][j]) * (x[j] - p[i][j]);
    s -= kHartmannAlpha[i] * std::exp(-e);
  }
  return s;
}

// Per-coordinate minimizers and minima of -sin(x) sin^20(i x^2 / pi) on [0, pi].
constexpr std::array<double, 10> kMichalewiczArgmin{
    2.2029055201701313, pi / 2, 1.2849915705514356, 1.9230584698653455, 1.7204697725640747,
    pi / 2,             1.4544139713592001, 1.7560865209419296, 1.6557174168176345, pi / 2};
constexpr std::array<double, 10> kMichalewiczMin{
    -0.8013034100985534, -1.0, -0.9590912698960069, -0.9384624184720838, -0.9888010806215053,
    -1.0,                -0.9932271353558827, -0.982872036272211,  -0.996394364925104,  -1.0};

constexpr double kStyblinskiArgmin = -2.903534030080572;
constexpr double kStyblinskiMin = -39.166165703771426;

struct Classical {
  std::string name;
  std::size_t fixed_dim;  // 0: any N >= min_dim
  std::size_t min_dim;
  bool center_minimizer;
  std::function<BoxDomain(std::size_t)> domain;
  double (*f)(std::span<const double>);
  std::function<Point(std::size_t)> minimizer;
  std::function<double(std::size_t)> optimum;
};

BoxDomain cube(std::size_t n, double lo, double hi) { return BoxDomain(Point(n, lo), Point(n, hi)); }

const std::vector<Classical>& table() {
  static const std::vector<Classical> t = {
      {"sphere", 0, 1, true, [](std::size_t n) { return cube(n, -5.12, 5.12); }, sphere,
       [](std::size_t n) { return Point(n, 0.0); }, [](std::size_t) { return 0.0; }},
      {"rosenbrock", 0, 2, false, [](std::size_t n) { return cube(n, -5.0, 10.0); }, rosenbrock,
       [](std::size_t n) { return Point(n, 1.0); }, [](std::size_t) { return 0.0; }},
      {"branin", 2, 2, false, [](std::size_t) { return BoxDomain({-5.0, 0.0}, {10.0, 15.0}); }, branin,
       [](std::size_t) { return Point{pi, 2.275}; }, [](std::size_t) { return 0.39788735772973816; }},
      {"rastrigin", 0, 1, true, [](std::size_t n) { return cube(n, -5.12, 5.12); }, rastrigin,
       [](std::size_t n) { return Point(n, 0.0); }, [](std::size_t) { return 0.0; }},
      {"ackley", 0, 1, true, [](std::size_t n) { return cube(n, -32.768, 32.768); }, ackley,
       [](std::size_t n) { return Point(n, 0.0); }, [](std::size_t) { return 0.0; }},
      {"griewank", 0, 1, true, [](std::size_t n) { return cube(n, -600.0, 600.0); }, griewank,
       [](std::size_t n) { return Point(n, 0.0); }, [](std::size_t) { return 0.0; }},
      {"hartmann3", 3, 3, false, [](std::size_t) { return cube(3, 0.0, 1.0); }, hartmann3,
       [](std::size_t) { return Point{0.11458888122541287, 0.5556488954739371, 0.8525469842172746}; },
       [](std::size_t) { return -3.862779787332663; }},
      {"hartmann6", 6, 6, false, [](std::size_t) { return cube(6, 0.0, 1.0); }, hartmann6,
       [](std::size_t) {
         return Point{0.20168950909365746, 0.15001069354111374, 0.4768739729250998,
                      0.2753324275220782,  0.3116516172395686,  0.6573005345536702};
       },
       [](std::size_t) { return -3.3223680114155147; }},
      {"beale", 2, 2, false, [](std::size_t) { return cube(2, -4.5, 4.5); }, beale,
       [](std::size_t) { return Point{3.0, 0.5}; }, [](std::size_t) { return 0.0; }},
      {"styblinski_tang", 0, 1, false, [](std::size_t n) { return cube(n, -5.0, 5.0); }, styblinski_tang,
       [](std::size_t n) { return Point(n, kStyblinskiArgmin); },
       [](std::size_t n) { return kStyblinskiMin * static_cast<double>(n); }},
      {"michalewicz", 0, 1, false, [](std::size_t n) { return cube(n, 0.0, pi); }, michalewicz,
       [](std::size_t n) { return Point(kMichalewiczArgmin.begin(), kMichalewiczArgmin.begin() + n); },
       [](std::size_t n) {
         double s = 0.0;
         for (std::size_t i = 0; i < n; ++i) s += kMichalewiczMin[i];
         return s;
       }},
      {"eggholder", 2, 2, false, [](std::size_t) { return cube(2, -512.0, 512.0); }, eggholder,
       [](std::size_t) { return Point{512.0, 404.2318051201336}; }, [](std::size_t) { return -959.6406627208507; }},
      {"dixon_price", 0, 2, false, [](std::size_t n) { return cube(n, -10.0, 10.0); }, dixon_price,
       [](std::size_t n) {
         Point x(n);
         for (std::size_t i = 0; i < n; ++i) {
           const double k = std::pow(2.0, static_cast<double>(i + 1));
           x[i] = std::pow(2.0, -(k - 2.0) / k);
         }
         return x;
       },
       [](std::size_t) { return 0.0; }},
      {"adjiman", 2, 2, false, [](std::size_t) { return BoxDomain({-1.0, -1.0}, {2.0, 1.0}); }, adjiman,
       [](std::size_t) { return Point{2.0, 0.1057834612683943}; }, [](std::size_t) { return -2.021806783359787; }},
  };
  return t;
}

bool supports(const Classical& c, std::size_t n) {
  if (c.fixed_dim != 0) return n == c.fixed_dim;
  return n >= c.min_dim && n <= kMichalewiczArgmin.size();
}

}  // namespace

const std::vector<std::string>& classical_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : table()) out.push_back(c.name);
    return out;
  }();
  return names;
}

bool has_center_minimizer(const std::string& name) {
  for (const auto& c : table()) {
    if (c.name == name) return c.center_minimizer;
  }
  return false;
}

std::optional<TestProblem> classical_problem(const std::string& name, std::size_t dimension) {
  for (const auto& c : table()) {
    if (c.name != name) continue;
    if (!supports(c, dimension)) return std::nullopt;
    return TestProblem{
        .name = c.name + "-n" + std::to_string(dimension),
        .family = "classical",
        .domain = c.domain(dimension),
        .evaluator = c.f,
        .known_optimum = c.optimum(dimension),
        .known_minimizer = c.minimizer(dimension),
        .shift = {},
        .seed = 0,
        .stationary_points = std::nullopt,
        .shift_seed = std::nullopt,
        .base_name = c.name,
    };
  }
  return std::nullopt;
}

std::vector<TestProblem> classical_suite(std::size_t dimension, std::uint64_t shift_seed) {
  std::vector<TestProblem> out;
  for (const auto& c : table()) {
    auto p = classical_problem(c.name, dimension);
    if (!p) continue;
    out.push_back(c.center_minimizer ? shift_minimizer(*p, shift_seed) : std::move(*p));
  }
  return out;
}

}  // namespace halo

#include "anyon/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace anyon {

namespace {

const std::map<std::string, std::string, std::less<>>& ascii_aliases() {
  static const std::map<std::string, std::string, std::less<>> aliases = {
      {"tau", "τ"}, {"sigma", "σ"}, {"psi", "ψ"}, {"eps", "ε"}, {"epsilon", "ε"},
      {"vac", "1"}, {"vacuum", "1"},
  };
  return aliases;
}

AnyonModel empty_model(std::string id, const std::vector<std::string>& names) {
  AnyonModel m;
  m.id = std::move(id);
  const int n = static_cast<int>(names.size());
  for (int i = 0; i < n; ++i) m.labels.push_back({i, names[i]});
  m.dual = identity_permutation(n);
  m.fusion.assign(static_cast<std::size_t>(n) * n * n, 0);
  m.smatrix = Matrix::Zero(n, n);
  m.twists.assign(n, 1.0);
  return m;
}

// Unit entries on every admissible block; larger blocks are overwritten by the caller.
void fill_unit_fsymbols(AnyonModel& m) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          auto rows = channel_labels(m, i, j, k, l);
          auto cols = crossed_channel_labels(m, i, j, k, l);
          for (int r : rows)
            for (int c : cols) m.fsymbols[{i, j, r, k, l, c}] = 1.0;
        }
}

void fill_vacuum_rsymbols(AnyonModel& m) {
  for (int a = 0; a < m.size(); ++a) {
    m.rsymbols[{0, a, a}] = 1.0;
    m.rsymbols[{a, 0, a}] = 1.0;
  }
}

int mixed_radix_index(const std::vector<int>& digits, const std::vector<int>& radix) {
  int idx = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) idx = idx * radix[i] + digits[i];
  return idx;
}

std::vector<int> mixed_radix_digits(int idx, const std::vector<int>& radix) {
  std::vector<int> d(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    d[i] = idx % radix[i];
    idx /= radix[i];
  }
  return d;
}

}  // namespace

cplx AnyonModel::F(int a, int b, int c, int d, int e, int f) const {
  auto it = fsymbols.find({a, b, c, d, e, f});
  return it == fsymbols.end() ? cplx(0.0) : it->second;
}

cplx AnyonModel::R(int a, int b, int c) const {
  auto it = rsymbols.find({a, b, c});
  return it == rsymbols.end() ? cplx(0.0) : it->second;
}

std::optional<int> AnyonModel::find_label(std::string_view name) const {
  std::string wanted(name);
  if (auto it = ascii_aliases().find(wanted); it != ascii_aliases().end()) {
    for (const auto& l : labels)
      if (l.name == it->second) return l.index;
  }
  for (const auto& l : labels)
    if (l.name == wanted) return l.index;
  // plain integer index
  if (!wanted.empty() && std::all_of(wanted.begin(), wanted.end(), ::isdigit)) {
    int idx = std::stoi(wanted);
    if (idx >= 0 && idx < size()) return idx;
  }
  return std::nullopt;
}

bool AnyonModel::is_abelian() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int outcomes = 0;
      for (int c = 0; c < n; ++c) outcomes += N(a, b, c);
      if (outcomes != 1) return false;
    }
  return true;
}

std::vector<int> channel_labels(const AnyonModel& m, int i, int j, int k, int l) {
  std::vector<int> out;
  for (int x = 0; x < m.size(); ++x)
    if (m.N(i, j, x) == 1 && m.N(k, l, m.dual[x]) == 1) out.push_back(x);
  return out;
}

std::vector<int> crossed_channel_labels(const AnyonModel& m, int i, int j, int k, int l) {
  std::vector<int> out;
  for (int x = 0; x < m.size(); ++x)
    if (m.N(j, k, x) == 1 && m.N(l, i, m.dual[x]) == 1) out.push_back(x);
  return out;
}

FBlock f_block(const AnyonModel& m, int i, int j, int k, int l) {
  FBlock b;
  b.rows = channel_labels(m, i, j, k, l);
  b.cols = crossed_channel_labels(m, i, j, k, l);
  b.matrix = Matrix::Zero(static_cast<Eigen::Index>(b.rows.size()),
                          static_cast<Eigen::Index>(b.cols.size()));
  for (std::size_t r = 0; r < b.rows.size(); ++r)
    for (std::size_t c = 0; c < b.cols.size(); ++c)
      b.matrix(r, c) = m.F(i, j, b.rows[r], k, l, b.cols[c]);
  return b;
}

AnyonModel fibonacci() {
  AnyonModel m = empty_model("fibonacci", {"1", "τ"});
  const int tau = 1;
  for (int a = 0; a < 2; ++a) {
    m.set_N(0, a, a, 1);
    m.set_N(a, 0, a, 1);
  }
  m.set_N(tau, tau, 0, 1);
  m.set_N(tau, tau, tau, 1);

  const double phi = (1 + std::sqrt(5.0)) / 2;
  const double norm = 1 / std::sqrt(phi + 2);
  m.smatrix << norm, norm * phi, norm * phi, -norm;
  m.twists = {1.0, unit_phase(4 * kPi / 5)};

  fill_unit_fsymbols(m);
  const double inv_phi = 1 / phi;
  const double inv_sqrt_phi = 1 / std::sqrt(phi);
  m.fsymbols[{tau, tau, 0, tau, tau, 0}] = inv_phi;
  m.fsymbols[{tau, tau, 0, tau, tau, tau}] = inv_sqrt_phi;
  m.fsymbols[{tau, tau, tau, tau, tau, 0}] = inv_sqrt_phi;
  m.fsymbols[{tau, tau, tau, tau, tau, tau}] = -inv_phi;

  fill_vacuum_rsymbols(m);
  m.rsymbols[{tau, tau, 0}] = unit_phase(-4 * kPi / 5);
  m.rsymbols[{tau, tau, tau}] = unit_phase(3 * kPi / 5);
  return m;
}

AnyonModel ising() {
  AnyonModel m = empty_model("ising", {"1", "σ", "ψ"});
  const int sigma = 1, psi = 2;
  for (int a = 0; a < 3; ++a) {
    m.set_N(0, a, a, 1);
    m.set_N(a, 0, a, 1);
  }
  m.set_N(psi, psi, 0, 1);
  m.set_N(psi, sigma, sigma, 1);
  m.set_N(sigma, psi, sigma, 1);
  m.set_N(sigma, sigma, 0, 1);
  m.set_N(sigma, sigma, psi, 1);

  const double r2 = std::sqrt(2.0);
  m.smatrix << 0.5, r2 / 2, 0.5, r2 / 2, 0.0, -r2 / 2, 0.5, -r2 / 2, 0.5;
  m.twists = {1.0, unit_phase(kPi / 8), -1.0};

  fill_unit_fsymbols(m);
  const double h = 1 / r2;
  m.fsymbols[{sigma, sigma, 0, sigma, sigma, 0}] = h;
  m.fsymbols[{sigma, sigma, 0, sigma, sigma, psi}] = h;
  m.fsymbols[{sigma, sigma, psi, sigma, sigma, 0}] = h;
  m.fsymbols[{sigma, sigma, psi, sigma, sigma, psi}] = -h;
  m.fsymbols[{sigma, psi, sigma, sigma, psi, sigma}] = -1.0;
  m.fsymbols[{psi, sigma, sigma, psi, sigma, sigma}] = -1.0;

  fill_vacuum_rsymbols(m);
  m.rsymbols[{sigma, sigma, 0}] = unit_phase(-kPi / 8);
  m.rsymbols[{sigma, sigma, psi}] = unit_phase(3 * kPi / 8);
  m.rsymbols[{sigma, psi, sigma}] = cplx(0, -1);
  m.rsymbols[{psi, sigma, sigma}] = cplx(0, -1);
  m.rsymbols[{psi, psi, 0}] = -1.0;
  return m;
}

AnyonModel dg_abelian(const std::vector<int>& factors) {
  if (factors.empty()) throw std::invalid_argument("dg_abelian needs at least one factor");
  for (int f : factors)
    if (f < 2) throw std::invalid_argument("cyclic factors must be at least 2");

  const int r = static_cast<int>(factors.size());
  std::vector<int> radix = factors;
  radix.insert(radix.end(), factors.begin(), factors.end());
  const int group_order = std::accumulate(factors.begin(), factors.end(), 1, std::multiplies<>());
  const int n = group_order * group_order;

  std::vector<std::string> names(n);
  for (int idx = 0; idx < n; ++idx) {
    auto d = mixed_radix_digits(idx, radix);
    if (idx == 0) {
      names[idx] = "1";
    } else if (r == 1 && factors[0] == 2) {
      static const char* z2[] = {"1", "e", "m", "ε"};
      names[idx] = z2[idx];
    } else {
      std::ostringstream os;
      os << '(';
      for (int i = 0; i < r; ++i) os << (i ? "." : "") << d[i];
      os << ',';
      for (int i = 0; i < r; ++i) os << (i ? "." : "") << d[r + i];
      os << ')';
      names[idx] = os.str();
    }
  }

  std::string id;
  if (r == 1) {
    id = "zn_toric:" + std::to_string(factors[0]);
  } else {
    id = "dg_abelian:";
    for (int i = 0; i < r; ++i) id += (i ? "," : "") + std::to_string(factors[i]);
  }
  AnyonModel m = empty_model(id, names);

  // flux digits d[0..r), charge digits d[r..2r)
  auto pairing = [&](const std::vector<int>& x, const std::vector<int>& y) {
    double t = 0;
    for (int i = 0; i < r; ++i)
      t += static_cast<double>((x[r + i] * y[i] + y[r + i] * x[i]) % factors[i]) / factors[i];
    return t;
  };
  auto self_pairing = [&](const std::vector<int>& x) {
    double t = 0;
    for (int i = 0; i < r; ++i) t += static_cast<double>((x[r + i] * x[i]) % factors[i]) / factors[i];
    return t;
  };
  // charge of the second label evaluated on the flux of the first
  auto braid_phase = [&](const std::vector<int>& x, const std::vector<int>& y) {
    double t = 0;
    for (int i = 0; i < r; ++i) t += static_cast<double>((y[r + i] * x[i]) % factors[i]) / factors[i];
    return t;
  };

  for (int a = 0; a < n; ++a) {
    auto da = mixed_radix_digits(a, radix);
    std::vector<int> neg(2 * r);
    for (int i = 0; i < 2 * r; ++i) neg[i] = (radix[i] - da[i]) % radix[i];
    m.dual[a] = mixed_radix_index(neg, radix);
    m.twists[a] = unit_phase(2 * kPi * self_pairing(da));
    for (int b = 0; b < n; ++b) {
      auto db = mixed_radix_digits(b, radix);
      std::vector<int> sum(2 * r);
      for (int i = 0; i < 2 * r; ++i) sum[i] = (da[i] + db[i]) % radix[i];
      const int c = mixed_radix_index(sum, radix);
      m.set_N(a, b, c, 1);
      m.smatrix(a, b) = unit_phase(-2 * kPi * pairing(da, db)) / static_cast<double>(group_order);
      m.rsymbols[{a, b, c}] = unit_phase(2 * kPi * braid_phase(da, db));
    }
  }
  fill_unit_fsymbols(m);
  return m;
}

AnyonModel zn_toric(int n) {
  if (n < 2) throw std::invalid_argument("zn_toric needs N >= 2");
  return dg_abelian({n});
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::istringstream is{std::string(text)};
  while (std::getline(is, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw std::invalid_argument("expected a comma-separated list of integers: " + std::string(text));
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("missing integer parameters");
  return out;
}

}  // namespace

bool is_builtin_spec(std::string_view spec) {
  return spec == "fibonacci" || spec == "ising" || spec.rfind("zn_toric:", 0) == 0 ||
         spec.rfind("dg_abelian:", 0) == 0;
}

AnyonModel load_builtin(std::string_view spec) {
  if (spec == "fibonacci") return fibonacci();
  if (spec == "ising") return ising();
  if (spec.rfind("zn_toric:", 0) == 0) {
    auto v = parse_int_list(spec.substr(9));
    if (v.size() != 1) throw std::invalid_argument("zn_toric takes a single N");
    return zn_toric(v[0]);
  }
  if (spec.rfind("dg_abelian:", 0) == 0) return dg_abelian(parse_int_list(spec.substr(11)));
  throw std::invalid_argument("unknown built-in model: " + std::string(spec));
}

bool ModelValidationReport::accepted() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return !c.mandatory || c.passed; });
}

const ValidationCheck* ModelValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

double total_dimension(const AnyonModel& m) { return 1.0 / m.smatrix(0, 0).real(); }

std::vector<double> quantum_dimensions(const AnyonModel& m) {
  const double D = total_dimension(m);
  std::vector<double> d(m.size());
  for (int a = 0; a < m.size(); ++a) d[a] = m.smatrix(0, a).real() * D;
  d[0] = 1.0;
  return d;
}

cplx verlinde_coefficient(const AnyonModel& m, int a, int b, int c) {
  cplx sum = 0;
  const int cbar = m.dual[c];
  for (int x = 0; x < m.size(); ++x)
    sum += m.smatrix(a, x) * m.smatrix(b, x) * m.smatrix(cbar, x) / m.smatrix(0, x);
  return sum;
}

ModelValidationReport validate(const AnyonModel& m, double tol) {
  ModelValidationReport report;
  report.tol = tol;
  const int n = m.size();
  auto add = [&](std::string name, bool mandatory, double residual, std::string detail = {}) {
    report.checks.push_back({std::move(name), mandatory, residual <= tol, residual, std::move(detail)});
  };

  add("smatrix_unitary", true, unitarity_residual(m.smatrix));

  {
    double worst = 0;
    std::string where;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          cplx v = verlinde_coefficient(m, a, b, c);
          double rounded = std::round(v.real());
          double dev = std::abs(v - static_cast<double>(m.N(a, b, c)));
          if (rounded != 0.0 && rounded != 1.0) dev = std::max(dev, 1.0);
          if (dev > worst) {
            worst = dev;
            where = "N^" + m.label_name(c) + "_{" + m.label_name(a) + "," + m.label_name(b) + "}";
          }
        }
    add("verlinde_fusion", true, worst, worst > tol ? "worst at " + where : "");
  }

  {
    double bad = 0;
    std::string what;
    for (int a = 0; a < n && bad == 0; ++a) {
      for (int c = 0; c < n; ++c)
        if (m.N(a, 0, c) != (a == c) || m.N(0, a, c) != (a == c)) {
          bad = 1;
          what = "vacuum fusion of " + m.label_name(a);
        }
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (m.N(a, b, c) != m.N(b, a, c)) {
            bad = 1;
            what = "commutativity at " + m.label_name(a) + "," + m.label_name(b);
          }
          if (m.N(a, b, c) != 0 && m.N(a, b, c) != 1) {
            bad = 1;
            what = "multiplicity above one";
          }
        }
      const int abar = m.dual[a];
      if (abar < 0 || abar >= n || m.dual[abar] != a || m.N(a, abar, 0) != 1) {
        bad = 1;
        what = "dual of " + m.label_name(a);
      }
    }
    if (m.dual.empty() || m.dual[0] != 0) {
      bad = 1;
      what = "vacuum must be self-dual";
    }
    add("fusion_axioms", true, bad, what);
  }

  {
    const double D = 1.0 / std::abs(m.smatrix(0, 0));
    double worst = 0;
    for (int a = 0; a < n; ++a) {
      cplx s = m.smatrix(0, a);
      worst = std::max(worst, std::abs(s.imag()) * D);
      worst = std::max(worst, std::max(0.0, 1.0 - s.real() * D));
    }
    add("quantum_dimension_bound", true, worst);
  }

  {
    double worst = 0;
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j)
        worst = std::max(worst, std::abs(m.smatrix(m.dual[a], j) - std::conj(m.smatrix(a, j))));
    add("smatrix_dual_conjugate", true, worst);
  }

  {
    double worst = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            FBlock b = f_block(m, i, j, k, l);
            if (b.rows.empty() && b.cols.empty()) continue;
            if (b.rows.size() != b.cols.size()) {
              worst = std::max(worst, 1.0);
              continue;
            }
            worst = std::max(worst, unitarity_residual(b.matrix));
          }
    add("fblock_unitary", false, m.fsymbols.empty() ? 0.0 : worst,
        m.fsymbols.empty() ? "no F-symbols" : "");
  }

  if (m.has_twists() && !m.rsymbols.empty()) {
    double worst = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (!m.N(a, b, c)) continue;
          cplx lhs = m.R(a, b, c) * m.R(b, a, c);
          cplx rhs = m.twists[c] / (m.twists[a] * m.twists[b]);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
    add("ribbon_monodromy", false, worst);
  }
  return report;
}

}  // namespace anyon

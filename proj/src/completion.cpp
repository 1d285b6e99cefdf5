#include "devissage/completion.hpp"

#include <algorithm>
#include <stdexcept>

namespace devissage {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int checked_prime(std::string_view text, std::string_view digits) {
  int p;
  try {
    p = std::stoi(std::string(digits));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad class spec '" + std::string(text) +
                                "': unreadable prime");
  }
  if (!is_prime(p))
    throw std::invalid_argument("bad class spec '" + std::string(text) +
                                "': " + std::to_string(p) + " is not prime");
  return p;
}

}  // namespace

GroupClass GroupClass::parse(std::string_view text) {
  if (text == "sol") return {Kind::solvable, 0};
  if (text == "nil") return {Kind::nilpotent, 0};
  if (text.starts_with("ell:"))
    return {Kind::ell, checked_prime(text, text.substr(4))};
  if (text.starts_with("prime-to:"))
    return {Kind::prime_to, checked_prime(text, text.substr(9))};
  throw std::invalid_argument(
      "bad class spec '" + std::string(text) +
      "' (want sol, nil, ell:<prime> or prime-to:<prime>)");
}

std::string GroupClass::to_string() const {
  switch (kind) {
    case Kind::solvable:
      return "sol";
    case Kind::nilpotent:
      return "nil";
    case Kind::ell:
      return "ell:" + std::to_string(prime);
    case Kind::prime_to:
      return "prime-to:" + std::to_string(prime);
  }
  return "?";
}

bool class_membership(const FiniteGroup& g, const GroupClass& c) {
  switch (c.kind) {
    case GroupClass::Kind::solvable:
      return is_solvable(g);
    case GroupClass::Kind::nilpotent:
      return is_nilpotent(g);
    case GroupClass::Kind::ell: {
      int n = g.order();
      while (n % c.prime == 0) n /= c.prime;
      return n == 1;
    }
    case GroupClass::Kind::prime_to:
      return g.order() % c.prime != 0;
  }
  return false;
}

namespace {

// Kernel of the maximal quotient in c, by the structural description of c.
ElementSet class_kernel(const FiniteGroup& g, const GroupClass& c) {
  switch (c.kind) {
    case GroupClass::Kind::solvable:
      // Perfect core: where the derived series stops.
      return series(g, SeriesKind::derived).back();
    case GroupClass::Kind::nilpotent:
      // Nilpotent residual: where the lower central series stops.
      return series(g, SeriesKind::lower_central).back();
    case GroupClass::Kind::ell: {
      // Any quotient killing the ell'-elements is an ell-group, and every
      // normal subgroup with ell-group quotient contains each ell'-element,
      // so the normal closure of the ell'-elements is the least kernel.
      // (The set is conjugation-closed, so its plain closure is normal.)
      ElementSet seed;
      for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) % c.prime != 0) seed.push_back(x);
      return closure(g, seed);
    }
    case GroupClass::Kind::prime_to: {
      // Dually: kill exactly the p-elements.
      ElementSet seed;
      for (int x = 0; x < g.order(); ++x) {
        int ord = g.element_order(x);
        while (ord % c.prime == 0) ord /= c.prime;
        if (ord == 1) seed.push_back(x);
      }
      return closure(g, seed);
    }
  }
  throw std::logic_error("unhandled class kind");
}

}  // namespace

ClassQuotient max_class_quotient(const FiniteGroup& g, const GroupClass& c) {
  ClassQuotient out;
  out.group_class = c;
  out.kernel = class_kernel(g, c);
  QuotientView q = quotient_group(g, out.kernel);
  out.quotient = std::move(q.group);
  out.projection = std::move(q.projection);
  if (!class_membership(out.quotient, c))
    throw std::logic_error("maximal class quotient left its class");
  return out;
}

ElementSet class_kernel_oracle(const FiniteGroup& g, const GroupClass& c) {
  ElementSet kernel = all_elements(g);
  for (const ElementSet& n : normal_subgroups(g)) {
    if (class_membership(quotient_group(g, n).group, c))
      kernel = intersect(kernel, n);
  }
  return kernel;
}

namespace {

bool subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ExactnessReport verify_completion_exactness(const FiniteGroup& g,
                                            const ElementSet& n,
                                            const GroupClass& c) {
  ExactnessReport report;
  QuotientView h = quotient_group(g, n);
  report.quotient_order = h.group.order();
  report.hypothesis_ok = class_membership(h.group, c);

  ClassQuotient gc = max_class_quotient(g, c);
  report.completion_order = gc.quotient.order();

  SubgroupView nv = subgroup_group(g, n);
  ClassQuotient nc = max_class_quotient(nv.group, c);
  report.sub_completion_order = nc.quotient.order();

  // G^c -> G/N is defined iff ker(G -> G^c) dies in G/N, i.e. K_G <= N.
  report.induced_defined = subset(gc.kernel, n);
  if (!report.induced_defined) return report;

  // psi: G^c -> G/N via any preimage; well-defined by the above.
  std::vector<int> psi(gc.quotient.order(), -1);
  for (int x = 0; x < g.order(); ++x) psi[gc.projection[x]] = h.projection[x];

  // N^c -> G^c is induced by inclusion; injectivity says exactly that the
  // kernel downstairs is no bigger: K_N = N \cap K_G.
  ElementSet kn_in_g;
  for (int e : nc.kernel) kn_in_g.push_back(nv.to_parent[e]);
  std::sort(kn_in_g.begin(), kn_in_g.end());
  report.injective = kn_in_g == intersect(n, gc.kernel);

  // image(N^c -> G^c) vs kernel(psi).
  ElementSet image, ker_psi;
  for (int e : n) image.push_back(gc.projection[e]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  for (int q = 0; q < gc.quotient.order(); ++q)
    if (psi[q] == 0) ker_psi.push_back(q);
  report.middle_exact = image == ker_psi;

  std::vector<char> hit(h.group.order(), 0);
  for (int v : psi) hit[v] = 1;
  report.surjective =
      std::all_of(hit.begin(), hit.end(), [](char x) { return x != 0; });
  return report;
}

RightExactnessReport verify_right_exactness(const FiniteGroup& g,
                                            const ElementSet& n,
                                            const GroupClass& c) {
  RightExactnessReport report;
  QuotientView h = quotient_group(g, n);
  ClassQuotient gc = max_class_quotient(g, c);
  ClassQuotient hc = max_class_quotient(h.group, c);

  // theta: G^c -> (G/N)^c needs K_G to land inside the pullback of K_{G/N}.
  std::vector<int> theta(gc.quotient.order(), -1);
  report.induced_defined = true;
  for (int x = 0; x < g.order(); ++x) {
    int target = hc.projection[h.projection[x]];
    int& slot = theta[gc.projection[x]];
    if (slot < 0)
      slot = target;
    else if (slot != target)
      report.induced_defined = false;
  }
  if (!report.induced_defined) return report;

  // image(N^c -> G^c) equals the image of N itself: N surjects onto N^c and
  // the triangle over G^c commutes.
  ElementSet image, ker_theta;
  for (int e : n) image.push_back(gc.projection[e]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  for (int q = 0; q < gc.quotient.order(); ++q)
    if (theta[q] == 0) ker_theta.push_back(q);
  report.middle_exact = image == ker_theta;

  std::vector<char> hit(hc.quotient.order(), 0);
  for (int v : theta) hit[v] = 1;
  report.surjective =
      std::all_of(hit.begin(), hit.end(), [](char x) { return x != 0; });
  return report;
}

SylowDecomposition nilpotent_sylow_decomposition(const FiniteGroup& g) {
  if (!is_nilpotent(g))
    throw std::invalid_argument("Sylow decomposition needs a nilpotent group");
  SylowDecomposition out;
  int n = g.order();
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p) || n % p != 0) continue;
    out.factors.emplace_back(p, sylow_subgroup(g, p));
  }

  // The multiplication map prod_p Syl_p -> g, componentwise over ascending
  // primes.  For nilpotent g this is an isomorphism; we verify rather than
  // trust that.
  std::size_t total = 1;
  for (const auto& [p, syl] : out.factors) total *= syl.size();
  if (total != static_cast<std::size_t>(n))
    return out;  // verified stays false: Sylow orders do not even multiply up

  auto product_of = [&](std::size_t flat) {
    int acc = 0;
    for (const auto& [p, syl] : out.factors) {
      acc = g.mul(acc, syl[flat % syl.size()]);
      flat /= syl.size();
    }
    return acc;
  };
  out.witness.assign(total, 0);
  std::vector<char> hit(n, 0);
  bool bijective = true;
  for (std::size_t i = 0; i < total; ++i) {
    int v = product_of(i);
    out.witness[i] = v;
    if (hit[v]) bijective = false;
    hit[v] = 1;
  }

  // Homomorphism check against componentwise multiplication.
  bool homomorphic = true;
  auto componentwise = [&](std::size_t a, std::size_t b) {
    std::size_t flat = 0, scale = 1;
    for (const auto& [p, syl] : out.factors) {
      std::size_t m = syl.size();
      int xa = syl[a % m], xb = syl[b % m];
      int prod = g.mul(xa, xb);
      std::size_t k =
          std::lower_bound(syl.begin(), syl.end(), prod) - syl.begin();
      flat += k * scale;
      scale *= m;
      a /= m;
      b /= m;
    }
    return flat;
  };
  for (std::size_t a = 0; a < total && homomorphic; ++a)
    for (std::size_t b = 0; b < total; ++b)
      if (out.witness[componentwise(a, b)] !=
          g.mul(out.witness[a], out.witness[b])) {
        homomorphic = false;
        break;
      }
  out.verified = bijective && homomorphic;
  return out;
}

std::vector<int> crt_lift_generators(
    const FiniteGroup& g, const std::map<int, std::vector<int>>& per_prime) {
  if (!is_nilpotent(g))
    throw std::invalid_argument("CRT lifting needs a nilpotent group");
  std::vector<std::pair<int, ElementSet>> sylows;
  int n = g.order();
  for (int p = 2; p <= n; ++p)
    if (is_prime(p) && n % p == 0) sylows.emplace_back(p, sylow_subgroup(g, p));

  std::size_t tuple_len = 0;
  bool first = true;
  for (const auto& [p, syl] : sylows) {
    auto it = per_prime.find(p);
    if (it == per_prime.end())
      throw std::invalid_argument("missing generator tuple for prime " +
                                  std::to_string(p));
    if (first) {
      tuple_len = it->second.size();
      first = false;
    } else if (it->second.size() != tuple_len) {
      throw std::invalid_argument("generator tuples of mixed length");
    }
    for (int x : it->second)
      if (!std::binary_search(syl.begin(), syl.end(), x))
        throw std::invalid_argument("element outside its Sylow subgroup");
    if (closure(g, it->second) != syl)
      throw std::invalid_argument("tuple does not generate its Sylow subgroup");
  }
  for (const auto& [p, tuple] : per_prime) {
    bool known = false;
    for (const auto& [q, syl] : sylows) known |= (q == p);
    if (!known)
      throw std::invalid_argument("prime " + std::to_string(p) +
                                  " does not divide the group order");
  }

  std::vector<int> lifted(tuple_len, 0);
  for (std::size_t j = 0; j < tuple_len; ++j)
    for (const auto& [p, syl] : sylows)
      lifted[j] = g.mul(lifted[j], per_prime.at(p)[j]);
  return lifted;
}

}  // namespace devissage

#include "devissage/covers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "devissage/kernel_basis.hpp"

namespace devissage {

namespace {

// Relators grouped by the highest generator they mention, so a partial image
// assignment can be checked as early as possible.
std::vector<std::vector<const Word*>> plan_relators(const FpPresentation& p) {
  std::vector<std::vector<const Word*>> at(p.rank());
  for (const Word& r : p.relators()) {
    int top = 0;
    for (letter_type l : r.letters()) top = std::max(top, std::abs(int(l)));
    at[top - 1].push_back(&r);  // relators are reduced and nonempty
  }
  return at;
}

std::uint64_t saturating_power(std::uint64_t base, int exp) {
  std::uint64_t n = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && n > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    n *= base;
  }
  return n;
}

void check_budget(const FpPresentation& p, const FiniteGroup& g) {
  std::uint64_t need = saturating_power(g.order(), p.rank());
  std::uint64_t budget = enumeration_budget();
  if (need > budget)
    throw BudgetError("homomorphism search needs " + std::to_string(need) +
                      " image tuples, over the budget of " +
                      std::to_string(budget) +
                      " (raise DEVISSAGE_BUDGET to allow this)");
}

// Depth-first over images[next..], candidates restricted to `allowed`,
// pruning on every relator that became fully assigned.
template <typename Emit>
void search_images(const FiniteGroup& g,
                   const std::vector<std::vector<const Word*>>& relators_at,
                   const std::vector<int>& allowed, std::vector<int>& images,
                   std::size_t next, Emit&& emit) {
  if (next == images.size()) {
    emit(images);
    return;
  }
  for (int x : allowed) {
    images[next] = x;
    bool ok = true;
    for (const Word* r : relators_at[next])
      if (evaluate_word(g, images, *r) != g.identity()) {
        ok = false;
        break;
      }
    if (ok) search_images(g, relators_at, allowed, images, next + 1, emit);
  }
}

bool generates_whole(const FiniteGroup& g, const std::vector<int>& images) {
  ElementSet seed(images.begin(), images.end());
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return static_cast<int>(closure(g, seed).size()) == g.order();
}

// Shared driver: partition on the image of generator 0, run `jobs` workers,
// and hand each worker's per-first-image results back in first-image order.
// worker(first_image) must be safe to run concurrently.
template <typename PerFirst>
void run_partitioned(const FiniteGroup& g, int jobs, PerFirst&& per_first) {
  int order = g.order();
  int workers = std::clamp(jobs, 1, order);
  if (workers == 1) {
    for (int x = 0; x < order; ++x) per_first(x);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (int x = t; x < order; x += workers) per_first(x);
    });
  for (auto& th : pool) th.join();
}

std::uint64_t count_into(const FpPresentation& p, const FiniteGroup& g,
                         const std::vector<int>& allowed, int jobs,
                         bool epi_only) {
  if (p.rank() == 0)
    return epi_only ? (g.order() == 1 ? 1 : 0) : 1;
  auto relators_at = plan_relators(p);
  // Only first-generator images inside `allowed` can start a tuple; other
  // slots in `per_first` just stay zero.
  std::vector<std::uint64_t> per_first(g.order(), 0);
  std::vector<char> first_ok(g.order(), 0);
  for (int x : allowed) first_ok[x] = 1;
  run_partitioned(g, jobs, [&](int first) {
    if (!first_ok[first]) return;
    std::vector<int> images(p.rank());
    images[0] = first;
    bool ok = true;
    for (const Word* r : relators_at[0])
      if (evaluate_word(g, images, *r) != g.identity()) {
        ok = false;
        break;
      }
    if (!ok) return;
    std::uint64_t local = 0;
    search_images(g, relators_at, allowed, images, 1,
                  [&](const std::vector<int>& full) {
                    if (!epi_only || generates_whole(g, full)) ++local;
                  });
    per_first[first] = local;
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : per_first) total += c;
  return total;
}

std::mutex aut_cache_mutex;
std::map<std::string, std::uint64_t> aut_cache;

std::uint64_t cached_automorphism_count(const FiniteGroup& g,
                                        const std::string& spec) {
  if (spec.empty()) return static_cast<std::uint64_t>(automorphism_count(g));
  {
    std::lock_guard<std::mutex> lock(aut_cache_mutex);
    auto it = aut_cache.find(spec);
    if (it != aut_cache.end()) return it->second;
  }
  auto n = static_cast<std::uint64_t>(automorphism_count(g));
  std::lock_guard<std::mutex> lock(aut_cache_mutex);
  aut_cache.emplace(spec, n);
  return n;
}

nlohmann::json census_to_json(const CoverCensus& c) {
  return nlohmann::json{{"genus", c.genus},
                        {"punctures", c.punctures},
                        {"group", c.group},
                        {"class", c.group_class},
                        {"hom_count", c.hom_count},
                        {"epi_count", c.epi_count},
                        {"aut_count", c.aut_count},
                        {"cover_count", c.cover_count}};
}

}  // namespace

std::uint64_t enumeration_budget() {
  constexpr std::uint64_t kDefault = 10'000'000;
  const char* env = std::getenv("DEVISSAGE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return v;
}

int evaluate_word(const FiniteGroup& g, const std::vector<int>& images,
                  const Word& w) {
  int value = g.identity();
  for (letter_type l : w.letters()) {
    int img = images.at(std::abs(int(l)) - 1);
    value = g.mul(value, l > 0 ? img : g.inv(img));
  }
  return value;
}

bool is_homomorphism(const FpPresentation& p, const FiniteGroup& g,
                     const std::vector<int>& images) {
  if (images.size() != static_cast<std::size_t>(p.rank()))
    throw std::invalid_argument("expected one image per generator");
  for (int x : images)
    if (x < 0 || x >= g.order())
      throw std::invalid_argument("image out of range");
  for (const Word& r : p.relators())
    if (evaluate_word(g, images, r) != g.identity()) return false;
  return true;
}

std::uint64_t count_homomorphisms(const FpPresentation& p,
                                  const FiniteGroup& g, int jobs) {
  check_budget(p, g);
  return count_into(p, g, all_elements(g), jobs, /*epi_only=*/false);
}

std::uint64_t count_epimorphisms(const FpPresentation& p, const FiniteGroup& g,
                                 int jobs) {
  check_budget(p, g);
  return count_into(p, g, all_elements(g), jobs, /*epi_only=*/true);
}

std::vector<std::vector<int>> list_epimorphisms(const FpPresentation& p,
                                                const FiniteGroup& g,
                                                int jobs) {
  check_budget(p, g);
  if (p.rank() == 0) {
    if (g.order() == 1) return {{}};
    return {};
  }
  auto relators_at = plan_relators(p);
  std::vector<std::vector<std::vector<int>>> buckets(g.order());
  std::vector<int> allowed = all_elements(g);
  run_partitioned(g, jobs, [&](int first) {
    std::vector<int> images(p.rank());
    images[0] = first;
    for (const Word* r : relators_at[0])
      if (evaluate_word(g, images, *r) != g.identity()) return;
    search_images(g, relators_at, allowed, images, 1,
                  [&](const std::vector<int>& full) {
                    if (generates_whole(g, full)) buckets[first].push_back(full);
                  });
  });
  std::vector<std::vector<int>> out;
  for (auto& bucket : buckets)
    for (auto& tuple : bucket) out.push_back(std::move(tuple));
  return out;
}

std::uint64_t count_epimorphisms_moebius(const FpPresentation& p,
                                         const FiniteGroup& g) {
  check_budget(p, g);
  std::vector<ElementSet> subs = all_subgroups(g);
  // Moebius function of the subgroup lattice, from the top down:
  // mu(G, G) = 1 and sum over K with H <= K <= G of mu(K, G) = 0.
  int count = static_cast<int>(subs.size());
  std::vector<long long> mu(count, 0);
  mu[count - 1] = 1;
  for (int i = count - 2; i >= 0; --i) {
    long long sum = 0;
    for (int j = i + 1; j < count; ++j)
      if (std::includes(subs[j].begin(), subs[j].end(), subs[i].begin(),
                        subs[i].end()))
        sum += mu[j];
    mu[i] = -sum;
  }
  long long total = 0;
  for (int i = 0; i < count; ++i) {
    if (mu[i] == 0) continue;
    auto homs = count_into(p, g, subs[i], 1, /*epi_only=*/false);
    total += mu[i] * static_cast<long long>(homs);
  }
  if (total < 0)
    throw std::logic_error("Moebius epimorphism count came out negative");
  return static_cast<std::uint64_t>(total);
}

CoverCensus cover_census(int genus, int punctures, const FiniteGroup& g,
                         const std::string& group_spec, const GroupClass& cls,
                         int jobs) {
  if (genus < 0 || punctures < 0)
    throw std::invalid_argument("genus and punctures must be nonnegative");
  if (!class_membership(g, cls))
    throw std::invalid_argument("deck group " +
                                (group_spec.empty() ? "<anonymous>" : group_spec) +
                                " lies outside class " + cls.to_string());
  auto start = std::chrono::steady_clock::now();
  FpPresentation p = punctures >= 1 ? punctured_curve_group(genus, punctures)
                                    : surface_group(genus);
  CoverCensus census;
  census.genus = genus;
  census.punctures = punctures;
  census.group = group_spec;
  census.group_class = cls.to_string();
  census.hom_count = count_homomorphisms(p, g, jobs);
  census.epi_count = count_epimorphisms(p, g, jobs);
  census.aut_count = cached_automorphism_count(g, group_spec);
  if (census.epi_count % census.aut_count != 0)
    throw std::logic_error("automorphism count does not divide the "
                           "epimorphism count; the Aut action is not free");
  census.cover_count = census.epi_count / census.aut_count;
  census.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return census;
}

std::optional<CoverCensus> census_cache_lookup(const std::string& path,
                                               int genus, int punctures,
                                               const std::string& group_spec,
                                               const std::string& class_spec) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object()) continue;
    if (row.value("genus", -1) != genus ||
        row.value("punctures", -1) != punctures ||
        row.value("group", "") != group_spec ||
        row.value("class", "") != class_spec)
      continue;
    CoverCensus census;
    census.genus = genus;
    census.punctures = punctures;
    census.group = group_spec;
    census.group_class = class_spec;
    census.hom_count = row.value("hom_count", std::uint64_t{0});
    census.epi_count = row.value("epi_count", std::uint64_t{0});
    census.aut_count = row.value("aut_count", std::uint64_t{0});
    census.cover_count = row.value("cover_count", std::uint64_t{0});
    return census;
  }
  return std::nullopt;
}

void census_cache_append(const std::string& path, const CoverCensus& census) {
  std::ofstream out(path, std::ios::app);
  if (!out)
    throw std::runtime_error("cannot open census cache for append: " + path);
  out << census_to_json(census).dump() << '\n';
}

RamificationCheck ramification_generation_check(const FpPresentation& p,
                                                const FiniteGroup& g,
                                                const std::vector<int>& images) {
  if (p.ramification().empty())
    throw std::invalid_argument(
        "presentation carries no ramification words to check");
  if (!is_homomorphism(p, g, images))
    throw std::invalid_argument("images do not define a homomorphism");
  ElementSet image_seed(images.begin(), images.end());
  std::sort(image_seed.begin(), image_seed.end());
  image_seed.erase(std::unique(image_seed.begin(), image_seed.end()),
                   image_seed.end());
  ElementSet image = closure(g, image_seed);

  ElementSet ram_seed;
  for (const auto& [label, w] : p.ramification())
    ram_seed.push_back(evaluate_word(g, images, w));
  std::sort(ram_seed.begin(), ram_seed.end());
  ram_seed.erase(std::unique(ram_seed.begin(), ram_seed.end()),
                 ram_seed.end());
  ElementSet generated = closure(g, ram_seed);

  RamificationCheck check;
  check.generated_order = static_cast<int>(generated.size());
  check.image_order = static_cast<int>(image.size());
  check.generates = (generated == image);
  return check;
}

TransferReport mu_n_transfer_check(int n, const FiniteGroup& g,
                                   int gamma0_image, int gamma1_image) {
  if (n < 1) throw std::invalid_argument("transfer degree must be >= 1");
  for (int x : {gamma0_image, gamma1_image})
    if (x < 0 || x >= g.order())
      throw std::invalid_argument("image out of range");

  TransferReport report;
  const int gens[2] = {gamma0_image, gamma1_image};
  const int shift[2] = {1 % n, 0};

  ElementSet pair_seed{gamma0_image, gamma1_image};
  std::sort(pair_seed.begin(), pair_seed.end());
  pair_seed.erase(std::unique(pair_seed.begin(), pair_seed.end()),
                  pair_seed.end());
  report.surjective =
      static_cast<int>(closure(g, pair_seed).size()) == g.order();

  // Label the subgroup <gamma0, gamma1> with values in Z/n so that right
  // multiplication by gamma_i adds shift[i].  Checking every (element,
  // generator) edge makes a conflict-free labelling a genuine homomorphism.
  std::vector<int> psi(g.order(), -1);
  psi[g.identity()] = 0;
  std::vector<int> queue{g.identity()};
  bool consistent = true;
  for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
    int x = queue[head];
    for (int i = 0; i < 2; ++i) {
      int y = g.mul(x, gens[i]);
      int value = (psi[x] + shift[i]) % n;
      if (psi[y] < 0) {
        psi[y] = value;
        queue.push_back(y);
      } else if (psi[y] != value) {
        consistent = false;
        break;
      }
    }
  }
  report.induced_defined = consistent;
  if (!consistent) return report;

  ElementSet kernel;
  for (int x = 0; x < g.order(); ++x)
    if (psi[x] == 0) kernel.push_back(x);
  report.kernel_order = static_cast<int>(kernel.size());

  SubgroupBasis basis = mu_n_kernel_basis(n);
  std::vector<int> images{gamma0_image, gamma1_image};
  ElementSet seed;
  for (const auto& [label, w] : basis.generators)
    seed.push_back(evaluate_word(g, images, w));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  ElementSet generated = closure(g, seed);
  report.generated_order = static_cast<int>(generated.size());
  report.kernel_generated = (generated == kernel);
  return report;
}

}  // namespace devissage

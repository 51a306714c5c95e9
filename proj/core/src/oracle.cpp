#include "flowerfr/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace flowerfr::oracle {

namespace {

template <typename T>
std::string str(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Visits every k-subset of 1..n as a sorted index list, driven by permuting a
// 0/1 selection mask.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<int> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), 1);
  std::vector<std::size_t> subset;
  do {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) subset.push_back(i + 1);
    }
    visit(std::span<const std::size_t>(subset));
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

std::vector<std::size_t> row_sums(const FrCode& code) {
  std::vector<std::size_t> out;
  for (const auto& list : code.node_lists()) out.push_back(list.size());
  return out;
}

std::vector<std::size_t> column_sums(const FrCode& code) {
  std::vector<std::size_t> out(code.packet_count(), 0);
  for (const auto& list : code.node_lists()) {
    for (std::size_t j : list) ++out[j - 1];
  }
  return out;
}

bool zero_one(const FrCode& code) {
  for (const auto& list : code.node_lists()) {
    if (std::set<std::size_t>(list.begin(), list.end()).size() != list.size()) return false;
  }
  return true;
}

class Collector {
 public:
  explicit Collector(std::string input) : input_(std::move(input)) {}

  template <typename F, typename O>
  void expect_equal(const std::string& check, const F& formula, const O& oracle) {
    if (!(formula == oracle)) out_.push_back({check, input_, str(formula), str(oracle)});
  }

  void expect(const std::string& check, bool ok, const std::string& formula,
              const std::string& oracle) {
    if (!ok) out_.push_back({check, input_, formula, oracle});
  }

  void absorb(std::vector<Discrepancy> more) {
    out_.insert(out_.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
  }

  std::vector<Discrepancy> take() { return std::move(out_); }

 private:
  std::string input_;
  std::vector<Discrepancy> out_;
};

}  // namespace

std::string describe(const FrCode& code) {
  std::ostringstream os;
  os << "code n=" << code.node_count() << " theta=" << code.packet_count() << " nodes=[";
  const auto lists = code.node_lists();
  for (std::size_t i = 0; i < lists.size(); ++i) {
    os << (i ? "," : "") << '{';
    for (std::size_t q = 0; q < lists[i].size(); ++q) os << (q ? "," : "") << lists[i][q];
    os << '}';
  }
  os << ']';
  return os.str();
}

std::string describe(const FlowerSpec& spec) {
  return "spec n=" + std::to_string(spec.nodes) + " theta=" + std::to_string(spec.packets) +
         " x=" + spec.dropping.to_string() + " y=" + spec.selection.to_string();
}

std::size_t union_size(const FrCode& code, std::span<const std::size_t> subset) {
  const auto lists = code.node_lists();
  std::set<std::size_t> all;
  for (std::size_t i : subset) all.insert(lists.at(i - 1).begin(), lists.at(i - 1).end());
  return all.size();
}

bool has_triple_shared_packet(const FrCode& code, std::span<const std::size_t> subset) {
  const auto lists = code.node_lists();
  std::vector<std::size_t> holders(code.packet_count() + 1, 0);
  for (std::size_t i : subset) {
    for (std::size_t j : std::set<std::size_t>(lists.at(i - 1).begin(), lists.at(i - 1).end())) {
      if (++holders[j] >= 3) return true;
    }
  }
  return false;
}

std::size_t file_size(const FrCode& code, std::size_t k, FileSizeMode mode, SubsetLimits limits) {
  if (k < 1 || k > code.node_count()) {
    throw RangeError("k=" + std::to_string(k) + " outside 1.." + std::to_string(code.node_count()));
  }
  if (binomial(code.node_count(), k) > limits.max_subsets) {
    throw LimitError("too many subsets for the file-size oracle");
  }
  std::size_t best = mode == FileSizeMode::kMin ? std::numeric_limits<std::size_t>::max() : 0;
  for_each_subset(code.node_count(), k, [&](std::span<const std::size_t> subset) {
    const std::size_t u = union_size(code, subset);
    best = mode == FileSizeMode::kMin ? std::min(best, u) : std::max(best, u);
  });
  return best;
}

FrCode scan_construct(const FlowerSpec& spec) {
  if (auto vs = validate(spec); !vs.empty()) throw ValidationError(spec, std::move(vs));
  const auto x = spec.dropping.bits();
  const auto y = spec.selection.bits();
  NodeLists lists(spec.nodes);

  // Walk the node circle one x-term at a time and the packet circle one
  // y-term at a time; each matched pair of ones is a placement.
  std::size_t xc = 0, yc = 0;
  std::size_t node = 0, packet = 0;  // current circle positions, 1-based once advanced
  for (;;) {
    while (xc < x.size() && x[xc] == 0) {
      ++xc;
      node = node % spec.nodes + 1;
    }
    while (yc < y.size() && y[yc] == 0) {
      ++yc;
      packet = packet % spec.packets + 1;
    }
    if (xc == x.size() || yc == y.size()) break;
    node = node % spec.nodes + 1;
    packet = packet % spec.packets + 1;
    lists[node - 1].push_back(packet);
    ++xc;
    ++yc;
  }
  return FrCode::from_node_lists(spec.nodes, spec.packets, lists);
}

std::vector<Discrepancy> check_suite(const FrCode& code, const CheckOptions& options) {
  Collector c(describe(code));
  const auto params = parameters(code);
  const auto rows = row_sums(code);
  const auto cols = column_sums(code);
  c.expect_equal("storage equals row sums", params.storage, rows);
  c.expect_equal("replication equals column sums", params.replication, cols);
  std::size_t sum_rows = 0, sum_cols = 0;
  for (auto v : rows) sum_rows += v;
  for (auto v : cols) sum_cols += v;
  c.expect_equal("sum alpha equals sum rho", sum_rows, sum_cols);
  c.expect_equal("sum alpha equals total copies", code.total(), sum_rows);

  const FrCode d = dual(code);
  c.expect_equal("dual of dual is identity", describe(dual(d)), describe(code));
  const auto dparams = parameters(d);
  c.expect_equal("dual storage equals replication", dparams.storage, params.replication);
  c.expect_equal("dual replication equals storage", dparams.replication, params.storage);

  // Goodness reasoning below assumes set semantics; a same-node duplicate
  // breaks both the dual argument and the bound.
  const bool sets = zero_one(code);
  const auto verdict = check_universally_good(code);
  if (sets && verdict.universally_good) {
    c.expect("dual of universally good code is universally good",
             check_universally_good(d).universally_good, "false", "true");
  }

  if (code.total() >= std::max(code.node_count(), code.packet_count())) {
    const auto witness = from_frcode(code);
    c.expect_equal("witness spec reproduces code", describe(flowerfr::construct(witness).code),
                   describe(code));
  }

  const std::size_t n = code.node_count();
  bool any_triple_holder = false;
  for (auto v : cols) any_triple_holder = any_triple_holder || v >= 3;
  for (std::size_t k = 1; k <= n; ++k) {
    if (binomial(n, k) > options.max_file_size_subsets) continue;
    const std::string at = " (k=" + std::to_string(k) + ")";
    const std::size_t guaranteed = guaranteed_file_size(code, k, options.limits);
    const std::size_t literal_min = file_size(code, k, FileSizeMode::kMin, options.limits);
    const std::size_t literal_max = file_size(code, k, FileSizeMode::kMax, options.limits);
    c.expect_equal("guaranteed file size equals literal minimum" + at, guaranteed, literal_min);

    const long long best = best_case_file_size(code, k, options.limits);
    c.expect("inclusion-exclusion maximum never exceeds literal maximum" + at,
             best <= static_cast<long long>(literal_max), str(best), str(literal_max));
    if (!any_triple_holder) {
      c.expect_equal("best-case file size equals literal maximum" + at, best,
                     static_cast<long long>(literal_max));
    }
    for_each_subset(n, k, [&](std::span<const std::size_t> subset) {
      if (has_triple_shared_packet(code, subset)) return;
      c.expect_equal("inclusion-exclusion equals union on triple-free subset " +
                         str(std::vector<std::size_t>(subset.begin(), subset.end())),
                     inclusion_exclusion_value(code, subset),
                     static_cast<long long>(union_size(code, subset)));
    });

    if (sets && verdict.universally_good) {
      const long long gb = generalized_bound(code, k);
      c.expect("guaranteed file size meets generalized bound" + at,
               static_cast<long long>(guaranteed) >= gb, str(guaranteed), ">= " + str(gb));
      const bool uniform = std::all_of(params.storage.begin(), params.storage.end(),
                                       [&](std::size_t a) { return a == params.max_storage; });
      if (uniform && k <= params.max_storage) {
        const long long mb = mbr_bound(k, params.max_storage);
        c.expect("guaranteed file size meets MBR bound" + at,
                 static_cast<long long>(guaranteed) >= mb, str(guaranteed), ">= " + str(mb));
      }
    }
    if (k == n) {
      c.expect_equal("M(n) equals number of present packets", guaranteed,
                     code.present_packet_count());
    }
  }
  return c.take();
}

std::vector<Discrepancy> check_suite(const FlowerSpec& spec, const CheckOptions& options) {
  Collector c(describe(spec));
  if (!validate(spec).empty()) return {};

  const auto built = flowerfr::construct(spec);
  const FrCode& code = built.code;
  c.expect_equal("event loop equals cursor oracle", describe(code), describe(scan_construct(spec)));
  c.expect_equal("congruence counts equal event loop", describe(incidence_counts(spec)),
                 describe(code));
  c.expect_equal("strided storage equals simulated row sums", storage_from_dropping(spec),
                 row_sums(code));
  c.expect_equal("strided replication equals simulated column sums",
                 replication_from_selection(spec), column_sums(code));

  if (spec.selection.all_ones()) {
    c.expect_equal("uniform replication closed form",
                   uniform_replication(spec.dropping.weight(), spec.packets),
                   replication_from_selection(spec));
  }
  if (spec.dropping.all_ones()) {
    c.expect_equal("uniform storage closed form",
                   uniform_storage(spec.selection.weight(), spec.nodes), storage_from_dropping(spec));
  }

  const auto cols = column_sums(code);
  for (std::size_t j = 1; j <= spec.packets; ++j) {
    bool seq_zero = true;
    for (std::size_t r = j; r <= spec.selection.length(); r += spec.packets) {
      seq_zero = seq_zero && !spec.selection.at(r);
    }
    c.expect_equal("column " + std::to_string(j) + " empty iff its y-residue class is zero",
                   seq_zero, cols[j - 1] == 0);
  }
  const auto rows = row_sums(code);
  for (std::size_t i = 1; i <= spec.nodes; ++i) {
    bool seq_zero = true;
    for (std::size_t m = i; m <= spec.dropping.length(); m += spec.nodes) {
      seq_zero = seq_zero && !spec.dropping.at(m);
    }
    c.expect_equal("row " + std::to_string(i) + " empty iff its x-residue class is zero",
                   seq_zero, rows[i - 1] == 0);
  }

  c.expect_equal("duplicate placements empty iff counts are 0/1",
                 duplicate_placements(spec).empty(), zero_one(code));
  c.expect_equal("dual spec construction equals transpose",
                 describe(flowerfr::construct(dual_spec(spec)).code), describe(dual(code)));

  c.absorb(check_suite(code, options));
  return c.take();
}

}  // namespace flowerfr::oracle

#include "anticode/catalog.hpp"

#include <initializer_list>
#include <utility>

namespace anticode {

namespace {

std::string triple_name(std::size_t n, std::size_t k, int d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

CodeCatalogEntry params_entry(std::size_t n, std::size_t k, int d, double published,
                              std::string source) {
  CodeCatalogEntry e;
  e.name = triple_name(n, k, d);
  e.n = n;
  e.k = k;
  e.d = d;
  e.codeword_count = pow4_checked(k);
  e.published_bound = published;
  e.source = std::move(source);
  return e;
}

WeightDistribution make_weights(std::size_t n,
                                std::initializer_list<std::pair<int, std::uint64_t>> nonzero) {
  WeightDistribution wd;
  wd.counts.assign(n + 1, 0);
  wd.counts[0] = 1;
  for (const auto& [w, c] : nonzero) wd.counts[std::size_t(w)] = c;
  return wd;
}

std::vector<CodeCatalogEntry> build() {
  std::vector<CodeCatalogEntry> v;

  // Published parameter table: six codes of length 100, two long codes, and
  // fourteen codes with lengths from 50 down to 10.
  v.push_back(params_entry(100, 10, 62, 6.337e-6, "table"));
  v.push_back(params_entry(100, 11, 60, 5.704e-5, "table"));
  v.push_back(params_entry(100, 12, 58, 5.133e-4, "table"));
  v.push_back(params_entry(100, 13, 56, 4.620e-3, "table"));
  v.push_back(params_entry(100, 14, 55, 0.02772, "table"));
  v.push_back(params_entry(100, 15, 52, 0.3742, "table"));
  v.push_back(params_entry(200, 20, 109, 3.517e-8, "table"));
  v.push_back(params_entry(250, 25, 136, 6.340e-10, "table"));
  v.push_back(params_entry(50, 5, 35, 3.516e-4, "table"));
  v.push_back(params_entry(50, 6, 33, 3.165e-3, "table"));
  v.push_back(params_entry(48, 6, 32, 4.747e-3, "table"));
  v.push_back(params_entry(48, 5, 33, 7.912e-4, "table"));
  v.push_back(params_entry(47, 6, 31, 7.120e-3, "table"));
  v.push_back(params_entry(46, 5, 32, 1.187e-3, "table"));
  v.push_back(params_entry(45, 5, 31, 1.780e-3, "table"));
  v.push_back(params_entry(43, 5, 30, 2.670e-3, "table"));
  v.push_back(params_entry(42, 5, 29, 4.005e-3, "table"));
  v.push_back(params_entry(41, 5, 28, 6.008e-3, "table"));
  v.push_back(params_entry(40, 4, 28, 1.502e-3, "table"));
  v.push_back(params_entry(30, 3, 22, 4.277e-3, "table"));
  v.push_back(params_entry(20, 2, 16, 0.01218, "table"));
  v.push_back(params_entry(10, 1, 10, 0.02601, "table"));

  // The four explicitly described codes.
  {
    CodeCatalogEntry e = params_entry(28, 4, 20, 0.03849, "example 1");
    e.weights = make_weights(28, {{20, 189}, {24, 63}, {28, 3}});
    e.published_weight_bound = 0.03038;
    v.push_back(std::move(e));
  }
  {
    CodeCatalogEntry e = params_entry(31, 4, 22, 0.01711, "example 2");
    e.weights = make_weights(31, {{22, 141}, {24, 87}, {28, 24}, {30, 3}});
    e.published_weight_bound = 0.01216;
    v.push_back(std::move(e));
  }
  {
    CodeCatalogEntry e = params_entry(40, 5, 28, 0.006008, "example 3 (quasi-cyclic)");
    e.code = quasi_cyclic_from_first_row(kQuasiCyclicFirstRow);
    v.push_back(std::move(e));
  }
  {
    CodeCatalogEntry e = params_entry(39, 4, 28, 0.001502, "example 4 (shortened)");
    e.code = quasi_cyclic_from_first_row(kQuasiCyclicFirstRow).shortened(0);
    v.push_back(std::move(e));
  }
  return v;
}

}  // namespace

const std::vector<CodeCatalogEntry>& catalog() {
  static const std::vector<CodeCatalogEntry> entries = build();
  return entries;
}

const CodeCatalogEntry* catalog_find(std::string_view name) {
  std::string key{name};
  if (!key.empty() && key.front() != '[') key = "[" + key + "]";
  for (const auto& e : catalog())
    if (e.name == key) return &e;
  return nullptr;
}

}  // namespace anticode

#include "flagcoh/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "root_systems_data.hpp"

namespace flagcoh {

namespace {

constexpr std::string_view kTableFormat = "flagcoh-root-systems/1";

Weight negate(Weight w) {
  for (auto& x : w) x = -x;
  return w;
}

Weight unit(std::size_t rank, std::size_t j) {
  Weight w(rank, 0);
  w[j] = 1;
  return w;
}

}  // namespace

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : w) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL + (h >> 29);
  return h;
}

std::string to_string(const Weight& w) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ']';
  return out.str();
}

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw Error("empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw Error("Cartan matrix is not square");
    if (entries_[i][i] != 2) throw Error("Cartan matrix diagonal entry is not 2");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      int a = entries_[i][j];
      if (a > 0 || a < -3) throw Error("Cartan matrix entry out of range at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
      if ((a == 0) != (entries_[j][i] == 0)) throw Error("Cartan matrix zero pattern is not symmetric");
    }
  }
}

// ---------------------------------------------------------------------------
// Data file

RootSystemTable RootSystemTable::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("root system table: ") + e.what());
  }
  if (doc.value("format", std::string()) != kTableFormat) {
    throw Error("root system table: expected format " + std::string(kTableFormat));
  }
  RootSystemTable table;
  try {
    for (const auto& [name, row] : doc.at("types").items()) {
      RootSystemEntry entry;
      entry.name = name;
      auto cartan = row.at("cartan").get<std::vector<std::vector<int>>>();
      entry.cartan = CartanMatrix(std::move(cartan));
      if (row.at("rank").get<std::size_t>() != entry.cartan.rank()) {
        throw Error("root system table: rank of " + name + " disagrees with its Cartan matrix");
      }
      entry.degrees = row.at("degrees").get<std::vector<int>>();
      if (entry.degrees.size() != entry.cartan.rank()) {
        throw Error("root system table: " + name + " needs one degree per node");
      }
      entry.invariant_weights = row.value("invariant_weights", std::string("roots"));
      table.entries_.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("root system table: ") + e.what());
  }
  return table;
}

RootSystemTable RootSystemTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const RootSystemTable& RootSystemTable::builtin() {
  static const RootSystemTable table = parse(detail::kBuiltinRootSystems);
  return table;
}

const RootSystemEntry& RootSystemTable::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  throw Error("unsupported root system type " + std::string(name));
}

std::vector<std::string> RootSystemTable::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

// ---------------------------------------------------------------------------
// Root systems

struct RootSystem::Data {
  RootSystemEntry entry;
  std::vector<Weight> simple_roots;
  std::vector<Weight> roots;
  std::vector<Weight> positive;
  std::unordered_set<Weight, WeightHash> root_set;
};

std::vector<Weight> generate_roots(const CartanMatrix& cartan, std::size_t cap) {
  const std::size_t n = cartan.rank();
  std::vector<Weight> simple;
  for (std::size_t i = 0; i < n; ++i) {
    Weight a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = cartan.at(j, i);
    simple.push_back(a);
  }
  std::vector<Weight> positive = simple;
  std::unordered_set<Weight, WeightHash> seen(simple.begin(), simple.end());
  for (std::size_t next = 0; next < positive.size(); ++next) {
    for (std::size_t i = 0; i < n; ++i) {
      const Weight beta = positive[next];
      if (beta == simple[i]) continue;
      Weight image = beta;
      for (std::size_t j = 0; j < n; ++j) image[j] -= beta[i] * simple[i][j];
      if (seen.insert(image).second) {
        positive.push_back(std::move(image));
        if (2 * positive.size() > cap) throw Error("root generation exceeded cap; malformed Cartan data?");
      }
    }
  }
  std::vector<Weight> all = positive;
  for (const auto& p : positive) all.push_back(negate(p));
  return all;
}

RootSystem RootSystem::build(std::string_view type_name, std::size_t rank, const RootSystemTable& table) {
  const RootSystemEntry& entry = table.find(type_name);
  if (entry.cartan.rank() != rank) {
    throw Error("type " + entry.name + " has rank " + std::to_string(entry.cartan.rank()) + ", not " +
                std::to_string(rank));
  }
  auto data = std::make_shared<Data>();
  data->entry = entry;
  const std::size_t n = rank;
  for (std::size_t i = 0; i < n; ++i) {
    Weight a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = entry.cartan.at(j, i);
    data->simple_roots.push_back(a);
  }
  std::size_t dim = 0;
  for (int d : entry.degrees) dim += static_cast<std::size_t>(2 * d - 1);
  data->roots = generate_roots(entry.cartan, 10 * dim);
  data->positive.assign(data->roots.begin(), data->roots.begin() + static_cast<long>(data->roots.size() / 2));
  data->root_set.insert(data->roots.begin(), data->roots.end());
  RootSystem rs;
  rs.data_ = std::move(data);
  return rs;
}

RootSystem RootSystem::build(std::string_view type_name) {
  const auto& entry = RootSystemTable::builtin().find(type_name);
  return build(type_name, entry.cartan.rank());
}

const std::string& RootSystem::name() const { return data_->entry.name; }
std::size_t RootSystem::rank() const { return data_->entry.cartan.rank(); }
const CartanMatrix& RootSystem::cartan() const { return data_->entry.cartan; }
const std::vector<int>& RootSystem::chevalley_degrees() const { return data_->entry.degrees; }
const std::vector<Weight>& RootSystem::roots() const { return data_->roots; }
const std::vector<Weight>& RootSystem::positive_roots() const { return data_->positive; }
bool RootSystem::is_root(const Weight& w) const { return data_->root_set.count(w) > 0; }
const std::string& RootSystem::invariant_weight_spec() const { return data_->entry.invariant_weights; }

const Weight& RootSystem::simple_root(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > rank()) {
    throw Error("reflection index " + std::to_string(i) + " out of range for " + name());
  }
  return data_->simple_roots[static_cast<std::size_t>(i - 1)];
}

Weight RootSystem::fundamental_weight(int i) const {
  simple_root(i);
  return unit(rank(), static_cast<std::size_t>(i - 1));
}

Weight RootSystem::rho() const { return Weight(rank(), 1); }

std::int64_t RootSystem::pairing(const Weight& w, int i) const {
  simple_root(i);
  return w.at(static_cast<std::size_t>(i - 1));
}

Weight RootSystem::simple_reflection(int i, const Weight& w) const {
  const Weight& a = simple_root(i);
  if (w.size() != rank()) throw Error("weight has wrong length");
  const std::int64_t c = w[static_cast<std::size_t>(i - 1)];
  Weight out = w;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= c * a[j];
  return out;
}

Weight RootSystem::apply_word(const WeylWord& word, const Weight& w) const {
  Weight out = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = simple_reflection(*it, out);
  return out;
}

std::vector<Weight> RootSystem::invariant_weights() const {
  const std::string& spec = invariant_weight_spec();
  if (spec == "roots") return roots();
  if (spec.rfind("orbit:", 0) == 0) {
    int k = std::stoi(spec.substr(6));
    return weyl_orbit(*this, fundamental_weight(k));
  }
  throw Error("unknown invariant_weights selector '" + spec + "' for " + name());
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  std::vector<Weight> orbit{w};
  std::unordered_set<Weight, WeightHash> seen{w};
  for (std::size_t next = 0; next < orbit.size(); ++next) {
    for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) {
      Weight image = rs.simple_reflection(i, orbit[next]);
      if (seen.insert(image).second) orbit.push_back(std::move(image));
    }
  }
  return orbit;
}

void check_word(const RootSystem& rs, const WeylWord& word) {
  for (int letter : word) rs.simple_root(letter);
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t max_length) {
  std::vector<WeylElement> out{WeylElement{rs.rho(), {}}};
  std::unordered_set<Weight, WeightHash> seen{rs.rho()};
  std::size_t level_begin = 0;
  for (std::size_t len = 0; len < max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) {
        if (out[k].key[static_cast<std::size_t>(i - 1)] < 0) continue;
        Weight key = rs.simple_reflection(i, out[k].key);
        if (!seen.insert(key).second) continue;
        WeylWord word = out[k].word;
        word.push_back(i);
        out.push_back(WeylElement{std::move(key), std::move(word)});
      }
    }
    if (out.size() == level_end) break;
    level_begin = level_end;
  }
  return out;
}

std::vector<WeylWord> reduced_words(const RootSystem& rs, const WeylElement& element) {
  std::map<Weight, std::vector<WeylWord>> memo;
  auto rec = [&](auto&& self, const Weight& key) -> const std::vector<WeylWord>& {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<WeylWord> words;
    if (key == rs.rho()) {
      words.push_back({});
    } else {
      for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) {
        if (key[static_cast<std::size_t>(i - 1)] > 0) continue;
        for (WeylWord w : self(self, rs.simple_reflection(i, key))) {
          w.push_back(i);
          words.push_back(std::move(w));
        }
      }
    }
    return memo.emplace(key, std::move(words)).first->second;
  };
  std::vector<WeylWord> words = rec(rec, element.key);
  std::sort(words.begin(), words.end());
  return words;
}

std::vector<std::uint64_t> length_profile(const RootSystem& rs) {
  Integer order = 1;
  for (int d : rs.chevalley_degrees()) order *= d;
  if (order > 200000) throw Error("Weyl group of " + rs.name() + " is too large to enumerate");
  auto elements = enumerate_weyl(rs, rs.positive_roots().size());
  std::vector<std::uint64_t> profile(rs.positive_roots().size() + 1, 0);
  for (const auto& e : elements) ++profile.at(e.length());
  return profile;
}

Integer weyl_order(const RootSystem& rs) {
  Integer order = 1;
  for (int d : rs.chevalley_degrees()) order *= d;
  if (rs.rank() <= 3) {
    auto elements = enumerate_weyl(rs, rs.positive_roots().size());
    if (Integer(static_cast<unsigned long>(elements.size())) != order) {
      throw Error("Weyl group of " + rs.name() + " has " + std::to_string(elements.size()) +
                  " elements but its degrees multiply to " + order.get_str());
    }
  }
  return order;
}

std::vector<Integer> length_generating_function(const std::vector<int>& degrees) {
  std::vector<Integer> poly{1};
  for (int d : degrees) {
    std::vector<Integer> next(poly.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (int k = 0; k < d; ++k) next[i + static_cast<std::size_t>(k)] += poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

// ---------------------------------------------------------------------------
// Frames

struct WeightFrame::Data {
  RootSystem rs;
  Ring ring;
  std::vector<Weight> basis;
  // inverse[k] is the k-th row of basis^{-1}: coordinate k of a weight.
  std::vector<std::vector<Rational>> inverse;
  std::vector<SubstitutionMap> reflections;
  // reflection_coords[i][k][l]: coordinate l of s_{i+1}(basis[k]).
  std::vector<std::vector<std::vector<std::int64_t>>> reflection_coords;
};

namespace {

std::vector<std::vector<Rational>> invert(const std::vector<Weight>& columns) {
  const std::size_t n = columns.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = Rational(static_cast<long>(columns[c].at(r)));
    m[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) throw Error("frame basis is linearly dependent");
    std::swap(m[pivot], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = m[r][n + c];
  }
  return inv;
}

std::vector<Integer> coordinates_of(const std::vector<std::vector<Rational>>& inverse, const Weight& w) {
  std::vector<Integer> out;
  for (const auto& row : inverse) {
    Rational x = 0;
    for (std::size_t j = 0; j < row.size(); ++j) x += row[j] * Rational(static_cast<long>(w.at(j)));
    if (x.get_den() != 1) {
      throw Error("weight " + to_string(w) + " has non-integral coordinate " + x.get_str() +
                  " in the frame basis");
    }
    out.push_back(x.get_num());
  }
  return out;
}

}  // namespace

WeightFrame::WeightFrame(RootSystem rs, std::vector<std::string> names, std::vector<Weight> basis,
                         CoefficientRing coefficients) {
  const std::size_t n = rs.rank();
  if (names.size() != n || basis.size() != n) throw Error("frame needs one variable per node");
  auto data = std::make_shared<Data>();
  std::vector<Variable> vars;
  for (auto& name : names) vars.push_back(Variable{std::move(name), 1});
  data->ring = RingDescriptor::make(std::move(vars), coefficients);
  data->inverse = invert(basis);
  data->basis = std::move(basis);
  data->rs = std::move(rs);
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    SubstitutionMap map(data->ring, data->ring);
    std::vector<std::vector<std::int64_t>> coords;
    for (std::size_t k = 0; k < n; ++k) {
      Weight image = data->rs.simple_reflection(i, data->basis[k]);
      std::vector<Integer> c = coordinates_of(data->inverse, image);
      std::vector<std::int64_t> row;
      std::vector<Term> terms;
      for (std::size_t l = 0; l < n; ++l) {
        row.push_back(c[l].get_si());
        if (c[l] != 0) terms.push_back(Term{data->ring->variable_power(l), Rational(c[l])});
      }
      coords.push_back(std::move(row));
      map.set(data->ring->name(k), Polynomial::from_terms(data->ring, std::move(terms)));
    }
    data->reflections.push_back(std::move(map));
    data->reflection_coords.push_back(std::move(coords));
  }
  data_ = std::move(data);
}

WeightFrame WeightFrame::fundamental(RootSystem rs, CoefficientRing coefficients) {
  std::vector<std::string> names;
  std::vector<Weight> basis;
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    names.push_back("w" + std::to_string(j + 1));
    basis.push_back(unit(rs.rank(), j));
  }
  return WeightFrame(std::move(rs), std::move(names), std::move(basis), coefficients);
}

WeightFrame WeightFrame::with_coefficients(CoefficientRing coefficients) const {
  std::vector<std::string> names;
  for (const auto& v : ring()->variables()) names.push_back(v.name);
  return WeightFrame(data_->rs, std::move(names), data_->basis, coefficients);
}

const RootSystem& WeightFrame::root_system() const { return data_->rs; }
const Ring& WeightFrame::ring() const { return data_->ring; }
const std::vector<Weight>& WeightFrame::basis() const { return data_->basis; }

std::vector<Integer> WeightFrame::coordinates(const Weight& w) const {
  if (w.size() != data_->basis.size()) throw Error("weight has wrong length");
  return coordinates_of(data_->inverse, w);
}

Polynomial WeightFrame::linear_form(const Weight& w) const {
  std::vector<Integer> c = coordinates(w);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) terms.push_back(Term{ring()->variable_power(k), Rational(c[k])});
  }
  return Polynomial::from_terms(ring(), std::move(terms));
}

Weight WeightFrame::weight_of(const Polynomial& linear) const {
  if (!same_ring(linear.ring(), ring())) throw Error("polynomial is not in the frame ring");
  Weight w(data_->basis.size(), 0);
  for (const auto& t : linear.terms()) {
    if (t.monomial.total_degree() != 1 || t.coeff.get_den() != 1) {
      throw Error("not an integral linear form: " + render(linear));
    }
    std::size_t k = 0;
    while (t.monomial.exponent(k) == 0) ++k;
    const long c = t.coeff.get_num().get_si();
    for (std::size_t j = 0; j < w.size(); ++j) w[j] += c * data_->basis[k][j];
  }
  return w;
}

const SubstitutionMap& WeightFrame::reflection_map(int i) const {
  data_->rs.simple_root(i);
  return data_->reflections[static_cast<std::size_t>(i - 1)];
}

Polynomial WeightFrame::reflect(int i, const Polynomial& p) const {
  if (!same_ring(p.ring(), ring())) throw Error("polynomial is not in the frame ring");
  return reflection_map(i).apply(p);
}

std::vector<std::uint64_t> WeightFrame::reflect_point(int i, std::span<const std::uint64_t> point,
                                                      std::uint64_t prime) const {
  data_->rs.simple_root(i);
  const auto& coords = data_->reflection_coords[static_cast<std::size_t>(i - 1)];
  std::vector<std::uint64_t> out(coords.size(), 0);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    std::uint64_t acc = 0;
    for (std::size_t l = 0; l < coords[k].size(); ++l) {
      const std::int64_t c = coords[k][l];
      if (c == 0) continue;
      std::uint64_t term = modp::mul(modp::reduce(Integer(static_cast<long>(c)), prime), point[l], prime);
      acc = modp::add(acc, term, prime);
    }
    out[k] = acc;
  }
  return out;
}

std::uint64_t WeightFrame::evaluate_weight(const Weight& w, std::span<const std::uint64_t> point,
                                           std::uint64_t prime) const {
  std::vector<Integer> c = coordinates(w);
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    acc = modp::add(acc, modp::mul(modp::reduce(c[k], prime), point[k], prime), prime);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// E8 t-coordinates

TCoordinateFrame TCoordinateFrame::e8(const RootSystem& rs) {
  if (rs.name() != "E8") throw Error("t-coordinates are defined for E8 only, got " + rs.name());
  std::vector<Weight> t(9);
  t[7] = rs.fundamental_weight(8);
  for (int i = 7; i >= 2; --i) t[static_cast<std::size_t>(i - 1)] = rs.simple_reflection(i + 1, t[static_cast<std::size_t>(i)]);
  t[0] = rs.simple_reflection(1, t[1]);
  t[8] = rs.fundamental_weight(2);

  Weight sum(8, 0);
  for (int i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) sum[j] += t[static_cast<std::size_t>(i)][j];
  }
  for (std::size_t j = 0; j < 8; ++j) {
    if (sum[j] != 3 * t[8][j]) throw Error("t-frame check failed: t1 + ... + t8 != 3t");
  }

  std::vector<std::string> names{"t2", "t3", "t4", "t5", "t6", "t7", "t8", "t"};
  std::vector<Weight> basis(t.begin() + 1, t.end());
  WeightFrame canonical(rs, names, basis);
  // Integrality of the basis: every root and fundamental weight must convert.
  for (const auto& root : rs.roots()) canonical.coordinates(root);
  for (int i = 1; i <= 8; ++i) canonical.coordinates(rs.fundamental_weight(i));

  std::vector<Variable> vars;
  for (int i = 1; i <= 8; ++i) vars.push_back(Variable{"t" + std::to_string(i), 1});
  vars.push_back(Variable{"t", 1});
  Ring full = RingDescriptor::make(std::move(vars), CoefficientRing::integers());
  return TCoordinateFrame(std::move(t), std::move(canonical), std::move(full));
}

Polynomial TCoordinateFrame::t1_image() const { return canonical_.linear_form(t_vectors_[0]); }

Polynomial TCoordinateFrame::elementary(int k) const {
  if (k < 0 || k > 8) return Polynomial(ring());
  std::vector<Polynomial> e(9, Polynomial(ring()));
  e[0] = Polynomial::constant(ring(), 1);
  for (int i = 0; i < 8; ++i) {
    Polynomial ti = canonical_.linear_form(t_vectors_[static_cast<std::size_t>(i)]);
    for (int j = std::min(i + 1, k); j >= 1; --j) e[static_cast<std::size_t>(j)] += ti * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(k)];
}

Ring TCoordinateFrame::without_t1(const Ring& ring) {
  std::vector<Variable> vars;
  for (const auto& v : ring->variables()) {
    if (v.name != "t1") vars.push_back(v);
  }
  return RingDescriptor::make(std::move(vars), ring->coefficients());
}

Polynomial TCoordinateFrame::normalize(const Polynomial& p) const {
  const Ring& source = p.ring();
  for (const char* name : {"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t"}) {
    if (!source->index_of(name)) throw Error(std::string("ring lacks variable ") + name);
  }
  Ring target = without_t1(source);
  SubstitutionMap map(source, target);
  for (const auto& v : source->variables()) {
    if (v.name != "t1") map.set_identity(v.name);
  }
  Polynomial image = Polynomial::variable(target, "t").scaled(3);
  for (int i = 2; i <= 8; ++i) image -= Polynomial::variable(target, "t" + std::to_string(i));
  map.set("t1", image);
  return map.apply(p);
}

}  // namespace flagcoh

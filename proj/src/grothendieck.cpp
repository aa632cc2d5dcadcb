#include "crystalline/grothendieck.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "crystalline/schur.hpp"

namespace crystalline {

int label_width(const BasisLabel& b) { return b.kappa ? b.kappa->lam.at(0) : 0; }

GrothElement GrothElement::basis(LieType t, const BasisLabel& b, Coeff c, int width) {
  GrothElement g(t, width);
  g.add(b, c);
  return g;
}

GrothElement GrothElement::unit(LieType t, int width) { return basis(t, BasisLabel{}, 1, width); }

GrothElement GrothElement::h(LieType t, int a, int width) {
  if (a < 0) throw std::invalid_argument("h index must be nonnegative");
  return pi(GShape(t, a ? Partition{a} : Partition{}, 1), width);
}

GrothElement GrothElement::hbar0(int width) { return pi(GShape(LieType::D, Partition{1, 1}, 1), width); }

GrothElement GrothElement::w(LieType t, const Partition& mu, int width) {
  return basis(t, BasisLabel{mu, std::nullopt}, 1, width);
}

GrothElement GrothElement::z(LieType t, int b, int width) {
  if (b < 0) throw std::invalid_argument("z index must be nonnegative");
  return w(t, Partition(std::vector<int>(b, 1)), width);
}

GrothElement GrothElement::pi(const GShape& s, int width) { return basis(s.type, BasisLabel{{}, s}, 1, width); }

Coeff GrothElement::coeff(const BasisLabel& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? 0 : it->second;
}

void GrothElement::add(const BasisLabel& b, Coeff c) {
  if (b.kappa && b.kappa->type != type_) throw std::invalid_argument("basis element of another type");
  if (c == 0 || label_width(b) > width_) return;
  auto [it, fresh] = terms_.emplace(b, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

GrothElement GrothElement::with_width(int width) const {
  GrothElement g(type_, std::min(width, width_));
  for (auto& [b, c] : terms_) g.add(b, c);
  return g;
}

GrothElement GrothElement::operator+(const GrothElement& o) const {
  if (o.type_ != type_) throw std::invalid_argument("type mismatch");
  GrothElement g = with_width(o.width_);
  for (auto& [b, c] : o.terms_) g.add(b, c);
  return g;
}

GrothElement GrothElement::operator-(const GrothElement& o) const { return *this + o * -1; }

GrothElement GrothElement::operator*(Coeff c) const {
  GrothElement g(type_, width_);
  for (auto& [b, v] : terms_) g.add(b, v * c);
  return g;
}

std::string GrothElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [b, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << b.str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

std::mutex memo_mutex;
std::map<std::tuple<GShape, GShape, int>, std::map<BasisLabel, long>> posi_posi_memo;
std::map<std::tuple<GShape, Partition, int>, std::map<BasisLabel, long>> posi_zero_memo;

std::map<BasisLabel, long> decompose(const Factor& l, const Factor& r, LieType t, int width,
                                     const GrothOptions& opts) {
  StabilizationPolicy p = opts.policy;
  p.max_width = width >= kExactWidth ? -1 : width;
  return stabilized_decomposition(l, r, t, p).terms;
}

}  // namespace

GrothElement mul_zero_zero(LieType t, const Partition& mu, const Partition& nu) {
  GrothElement g(t);
  for (auto& [pi, c] : lr_product(mu, nu)) g.add(BasisLabel{pi, std::nullopt}, c);
  return g;
}

GrothElement mul_zero_posi(const Partition& mu, const GShape& kappa) {
  return GrothElement::basis(kappa.type, BasisLabel{mu, kappa});
}

GrothElement mul_posi_posi(const GShape& k1, const GShape& k2, int width, const GrothOptions& opts) {
  if (k1.type != k2.type) throw std::invalid_argument("type mismatch");
  if (width >= kExactWidth) throw std::invalid_argument("a product of two positive-level classes needs a finite width");
  auto key = std::make_tuple(k1, k2, width);
  std::map<BasisLabel, long> terms;
  bool hit = false;
  {
    std::lock_guard<std::mutex> g(memo_mutex);
    if (auto it = posi_posi_memo.find(key); it != posi_posi_memo.end()) {
      terms = it->second;
      hit = true;
    }
  }
  if (!hit) {
    terms = decompose(k1, k2, k1.type, width, opts);
    for (auto& [b, c] : terms)
      if (!b.mu.empty()) throw std::logic_error("level-zero part in a product of dominant classes: " + b.str());
    std::lock_guard<std::mutex> g(memo_mutex);
    posi_posi_memo[key] = terms;
  }
  GrothElement out(k1.type, width);
  for (auto& [b, c] : terms) out.add(b, c);
  return out;
}

GrothElement mul_posi_zero(const GShape& kappa, const Partition& nu, int width, const GrothOptions& opts) {
  if (nu.empty()) return GrothElement::pi(kappa, width);
  auto key = std::make_tuple(kappa, nu, width);
  std::map<BasisLabel, long> terms;
  bool hit = false;
  {
    std::lock_guard<std::mutex> g(memo_mutex);
    if (auto it = posi_zero_memo.find(key); it != posi_zero_memo.end()) {
      terms = it->second;
      hit = true;
    }
  }
  if (!hit) {
    terms = decompose(kappa, nu, kappa.type, width, opts);
    std::lock_guard<std::mutex> g(memo_mutex);
    posi_zero_memo[key] = terms;
  }
  GrothElement out(kappa.type, width);
  for (auto& [b, c] : terms) out.add(b, c);
  return out;
}

namespace {

// ϖ_μ · (Σ terms): multiply the level-zero parts by LR.
void left_zero_into(const Partition& mu, const BasisLabel& b, Coeff c, GrothElement& out) {
  if (mu.empty()) {
    out.add(b, c);
    return;
  }
  for (auto& [pi, k] : lr_product(mu, b.mu)) out.add(BasisLabel{pi, b.kappa}, c * k);
}

}  // namespace

GrothElement groth_mul(const GrothElement& f, const GrothElement& g, const GrothOptions& opts) {
  if (f.type() != g.type()) throw std::invalid_argument("type mismatch");
  const LieType t = f.type();
  int shift = 0;
  for (auto& [b, c] : g.terms()) shift = std::max(shift, b.mu.size());
  const int width = std::min(g.width(), f.width() >= kExactWidth ? kExactWidth : f.width() - shift);
  GrothElement out(t, width);
  for (auto& [bf, cf] : f.terms())
    for (auto& [bg, cg] : g.terms()) {
      const Coeff c = cf * cg;
      if (!bf.kappa) {
        // ϖ_μ·ϖ_μ'·Π(κ')
        for (auto& [pi, k] : lr_product(bf.mu, bg.mu)) out.add(BasisLabel{pi, bg.kappa}, c * k);
        continue;
      }
      GrothElement mid = mul_posi_zero(*bf.kappa, bg.mu, width, opts);
      for (auto& [bm, cm] : mid.terms()) {
        if (!bg.kappa) {
          left_zero_into(bf.mu, bm, c * cm, out);
          continue;
        }
        GrothElement top = mul_posi_posi(*bm.kappa, *bg.kappa, width, opts);
        for (auto& [bt, ct] : top.terms())
          left_zero_into(bf.mu, BasisLabel{bm.mu, bt.kappa}, c * cm * ct, out);
      }
    }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<Coeff> StructureConstantCache::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> g(mu_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void StructureConstantCache::store(const std::string& key, Coeff value) {
  std::lock_guard<std::mutex> g(mu_);
  table_[key] = value;  // values are deterministic; last write wins
}

std::size_t StructureConstantCache::size() const {
  std::lock_guard<std::mutex> g(mu_);
  return table_.size();
}

std::string StructureConstantCache::key(LieType t, int ell, const std::vector<int>& mu, const GShape& target) {
  std::ostringstream os;
  os << type_letter(t) << " " << ell << " ";
  for (size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
  os << " | " << target.str();
  return os.str();
}

std::size_t StructureConstantCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string line;
  std::size_t count = 0, lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.rfind(" | ");
    if (bar == std::string::npos || line.find(" | ") == bar)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'type ell parts | shape | coeff'");
    Coeff v;
    try {
      v = std::stoll(line.substr(bar + 3));
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad coefficient");
    }
    store(line.substr(0, bar), v);
    ++count;
  }
  return count;
}

void StructureConstantCache::save(const std::string& path) const {
  std::lock_guard<std::mutex> g(mu_);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (auto& [k, v] : table_) out << k << " | " << v << "\n";
}

std::vector<GShape> structure_factors(LieType t, const std::vector<int>& mu, int m) {
  std::vector<int> parts;
  for (int x : mu)
    if (x > 0) parts.push_back(x);
  const int len = static_cast<int>(parts.size());
  std::vector<GShape> out;
  if (len <= m) {
    parts.resize(m, 0);
    for (int a : parts) out.emplace_back(t, a ? Partition{a} : Partition{}, 1);
    return out;
  }
  if (t != LieType::D || len > 2 * m) throw std::invalid_argument("too many parts for the level");
  for (int i = 0; i < 2 * m - len; ++i) out.emplace_back(t, Partition{parts[i]}, 1);
  for (int i = 0; i < len - m; ++i) out.emplace_back(t, Partition{1, 1}, 1);
  return out;
}

Coeff structure_constant(LieType t, const std::vector<int>& mu, int m, const GShape& target,
                         StructureConstantCache* cache, const GrothOptions& opts) {
  if (target.type != t) throw std::invalid_argument("type mismatch");
  if (m != target.ell) return 0;
  const std::string key = StructureConstantCache::key(t, m, mu, target);
  if (cache)
    if (auto v = cache->lookup(key)) return *v;
  const int width = target.lam.at(0);
  auto factors = structure_factors(t, mu, m);
  GrothElement acc = GrothElement::unit(t, width);
  for (const GShape& f : factors) acc = groth_mul(acc, GrothElement::pi(f, width), opts);
  const Coeff v = acc.coeff(BasisLabel{{}, target});
  if (cache) cache->store(key, v);
  return v;
}

}  // namespace crystalline

#include "berez/field.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace berez {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return std::uint64_t((unsigned __int128)a * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin witness set for 64-bit integers
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ZetaAssignment parse_zeta_assignment(std::istream& in) {
  ZetaAssignment za;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int vertex;
    std::string value;
    if (!(ls >> vertex)) continue;  // blank line
    if (vertex <= 0 || !(ls >> value)) {
      throw std::runtime_error("zeta file line " + std::to_string(lineno) +
                               ": expected '<vertex> <p>/<q>'");
    }
    Rational q;
    if (q.set_str(value, 10) != 0)
      throw std::runtime_error("zeta file line " + std::to_string(lineno) +
                               ": bad rational '" + value + "'");
    q.canonicalize();
    if (!za.values.emplace(vertex, q).second)
      throw std::runtime_error("zeta file line " + std::to_string(lineno) +
                               ": duplicate vertex " + std::to_string(vertex));
  }
  return za;
}

ZetaAssignment parse_zeta_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open zeta file: " + path);
  return parse_zeta_assignment(in);
}

std::map<int, Rational> random_rational_assignment(const std::set<int>& vertices,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<int, Rational> out;
  std::set<long> used;
  for (int v : vertices) {
    for (int tries = 0;; ++tries) {
      if (tries > 1000)
        throw std::runtime_error("cannot draw distinct zeta values");
      long x = long(rng() % 2000001) - 1000000;
      if (used.insert(x).second) {
        out.emplace(v, Rational(x));
        break;
      }
    }
  }
  return out;
}

std::map<int, std::uint64_t> random_prime_assignment(const std::set<int>& vertices,
                                                     std::uint64_t seed,
                                                     std::uint64_t p) {
  if (p < 3 || vertices.size() >= p - 1)
    throw std::runtime_error("field too small for distinct zeta values");
  std::mt19937_64 rng(seed);
  std::map<int, std::uint64_t> out;
  std::set<std::uint64_t> used;
  for (int v : vertices) {
    for (int tries = 0;; ++tries) {
      if (tries > 1000)
        throw std::runtime_error("cannot draw distinct zeta values");
      std::uint64_t x = rng() % (p - 1) + 1;
      if (used.insert(x).second) {
        out.emplace(v, x);
        break;
      }
    }
  }
  return out;
}

namespace {
template <class Map>
void check_distinct(const Map& zeta) {
  for (auto i = zeta.begin(); i != zeta.end(); ++i) {
    auto j = i;
    for (++j; j != zeta.end(); ++j)
      if (i->second == j->second)
        throw std::invalid_argument(
            "zeta values of vertices " + std::to_string(i->first) + " and " +
            std::to_string(j->first) + " coincide");
  }
}
}  // namespace

RationalField::RationalField(std::map<int, Rational> zeta)
    : zeta_(std::move(zeta)) {
  check_distinct(zeta_);
}

Rational RationalField::zeta(int i) const {
  auto it = zeta_.find(i);
  if (it == zeta_.end())
    throw std::out_of_range("vertex " + std::to_string(i) + " has no zeta value");
  return it->second;
}

Rational RationalField::zeta_diff(int i, int j) const {
  if (i == j) throw std::invalid_argument("zeta_diff with equal vertices");
  return zeta(i) - zeta(j);
}

std::string RationalField::describe_zeta() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, q] : zeta_) {
    if (!first) os << " ";
    first = false;
    os << v << "=" << q.get_str();
  }
  return os.str();
}

PrimeField::PrimeField(std::uint64_t p, std::map<int, std::uint64_t> zeta)
    : p_(p), zeta_(std::move(zeta)) {
  if (!is_prime_u64(p_)) throw std::invalid_argument("modulus is not prime");
  for (auto& [v, x] : zeta_) x %= p_;
  check_distinct(zeta_);
}

Fp PrimeField::zeta(int i) const {
  auto it = zeta_.find(i);
  if (it == zeta_.end())
    throw std::out_of_range("vertex " + std::to_string(i) + " has no zeta value");
  return Fp{it->second, p_};
}

Fp PrimeField::zeta_diff(int i, int j) const {
  if (i == j) throw std::invalid_argument("zeta_diff with equal vertices");
  return zeta(i) - zeta(j);
}

Fp PrimeField::from_int(long n) const {
  if (n >= 0) return Fp{std::uint64_t(n), p_};
  return -Fp{std::uint64_t(-n), p_};
}

std::string PrimeField::describe_zeta() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, x] : zeta_) {
    if (!first) os << " ";
    first = false;
    os << v << "=" << x;
  }
  return os.str();
}

RatFunc SymbolicField::zeta(int i) const {
  if (i < 1 || i > Mpoly::kMaxVars)
    throw std::out_of_range("symbolic mode supports vertices 1.." +
                            std::to_string(Mpoly::kMaxVars));
  return RatFunc::variable(i);
}

RatFunc SymbolicField::zeta_diff(int i, int j) const {
  if (i == j) throw std::invalid_argument("zeta_diff with equal vertices");
  return RatFunc(Mpoly::variable(i) - Mpoly::variable(j));
}

}  // namespace berez

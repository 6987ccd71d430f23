#include "toricgraph/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <span>
#include <vector>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

constexpr char kMagic[4] = {'T', 'G', 'G', 'B'};
constexpr uint32_t kFormatVersion = 1;
// Bump to invalidate cached bases after an algorithm change.
constexpr uint32_t kAlgorithmVersion = 1;

uint64_t fnv1a(const std::string& text, uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void put_u32(std::ostream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, uint64_t v) {
  put_u32(out, static_cast<uint32_t>(v));
  put_u32(out, static_cast<uint32_t>(v >> 32));
}

void put_string(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

bool get_u32(std::istream& in, uint32_t& v) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
  v = static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
      (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
  return true;
}

bool get_u64(std::istream& in, uint64_t& v) {
  uint32_t lo, hi;
  if (!get_u32(in, lo) || !get_u32(in, hi)) return false;
  v = static_cast<uint64_t>(hi) << 32 | lo;
  return true;
}

bool get_string(std::istream& in, std::string& s) {
  uint32_t n;
  if (!get_u32(in, n) || n > (1u << 20)) return false;
  s.resize(n);
  return static_cast<bool>(in.read(s.data(), n));
}

std::filesystem::path cache_path(const std::string& dir, const std::string& key) {
  return std::filesystem::path(dir) / (key + ".tggb");
}

}  // namespace

std::string cache_key(const Graph& g, const MonomialOrder& order) {
  uint64_t h = fnv1a(g.canonical_json());
  h = fnv1a(order.describe(), h);
  h = fnv1a("algo:" + std::to_string(kAlgorithmVersion), h);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::optional<GroebnerBasis> cache_load(const std::string& dir, const std::string& key,
                                        const ContextPtr& ctx) {
  std::ifstream in(cache_path(dir, key), std::ios::binary);
  if (!in) return std::nullopt;

  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) return std::nullopt;
  uint32_t format = 0, algo = 0;
  if (!get_u32(in, format) || format != kFormatVersion) return std::nullopt;
  if (!get_u32(in, algo) || algo != kAlgorithmVersion) return std::nullopt;
  std::string stored_key;
  if (!get_string(in, stored_key) || stored_key != key) return std::nullopt;

  uint32_t num_vars = 0;
  if (!get_u32(in, num_vars) || num_vars != ctx->num_vars()) return std::nullopt;
  for (uint32_t v = 0; v < num_vars; ++v) {
    std::string name;
    if (!get_string(in, name) || name != ctx->variable_name(static_cast<int>(v)))
      return std::nullopt;
  }

  uint64_t num_gens = 0;
  if (!get_u64(in, num_gens) || num_gens > (1u << 24)) return std::nullopt;
  std::vector<Polynomial> gens;
  gens.reserve(num_gens);
  for (uint64_t k = 0; k < num_gens; ++k) {
    std::vector<int> lead(num_vars), trail(num_vars);
    for (auto* side : {&lead, &trail})
      for (uint32_t v = 0; v < num_vars; ++v) {
        uint32_t e;
        if (!get_u32(in, e) || e > (1u << 20)) return std::nullopt;
        (*side)[v] = static_cast<int>(e);
      }
    try {
      gens.push_back(Polynomial::from_terms(
          ctx, {{Monomial::from_exponents(std::move(lead)), Rational(1)},
                {Monomial::from_exponents(std::move(trail)), Rational(-1)}}));
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  try {
    GroebnerBasis gb(ctx, std::move(gens));
    if (!is_groebner_basis(std::span<const Polynomial>(gb.generators())))
      return std::nullopt;
    return gb;
  } catch (const Error&) {
    return std::nullopt;  // malformed or stale: caller recomputes
  }
}

void cache_store(const std::string& dir, const std::string& key, const GroebnerBasis& gb) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ValidationError("cannot create cache directory " + dir);

  const ContextPtr& ctx = gb.context();
  const auto path = cache_path(dir, key);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write cache file " + tmp);
    out.write(kMagic, 4);
    put_u32(out, kFormatVersion);
    put_u32(out, kAlgorithmVersion);
    put_string(out, key);
    put_u32(out, static_cast<uint32_t>(ctx->num_vars()));
    for (size_t v = 0; v < ctx->num_vars(); ++v)
      put_string(out, ctx->variable_name(static_cast<int>(v)));
    put_u64(out, gb.size());
    for (const Polynomial& g : gb.generators()) {
      if (g.num_terms() != 2 || g.terms()[1].second != Rational(-1))
        throw ValidationError("cache stores only binomial bases");
      for (const auto* side : {&g.terms()[0].first, &g.terms()[1].first})
        for (size_t v = 0; v < ctx->num_vars(); ++v)
          put_u32(out, static_cast<uint32_t>(side->exponent(static_cast<int>(v))));
    }
    if (!out) throw ValidationError("short write to cache file " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ValidationError("cannot move cache file into place: " + path.string());
}

std::string default_cache_dir() {
  const char* env = std::getenv("TORICGRAPH_CACHE");
  return env ? std::string(env) : std::string();
}

}  // namespace toricgraph

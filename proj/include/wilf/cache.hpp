#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wilf/errors.hpp"
#include "wilf/int_poly.hpp"
#include "wilf/period.hpp"

namespace wilf {

/// On-disk form of a computed L(p,x). Coefficients are decimal strings in
/// ascending degree order; native numeric types cannot hold them at large p.
struct PolynomialCacheFile {
    unsigned format_version = 1;
    unsigned long p = 0;
    std::string variable = "x";
    std::vector<std::string> coefficients;
    std::string method;  // "crt" | "numeric"
    std::vector<uint64_t> crt_primes;
    uint64_t primitive_root = 0;

    static PolynomialCacheFile from_poly(unsigned long p, const IntPolynomial& L,
                                         const std::string& method,
                                         const std::vector<uint64_t>& primes, uint64_t g) {
        PolynomialCacheFile f;
        f.p = p;
        f.method = method;
        f.crt_primes = primes;
        f.primitive_root = g;
        f.coefficients.reserve(L.coeffs.size());
        for (const auto& c : L.coeffs) f.coefficients.push_back(c.get_str());
        return f;
    }

    IntPolynomial to_poly() const {
        IntPolynomial L;
        L.coeffs.reserve(coefficients.size());
        for (const auto& s : coefficients) L.coeffs.emplace_back(s);
        return L;
    }

    /// Structural invariants: p+1 coefficients, monic, zero x^{p-1} term.
    void validate_shape() const {
        if (coefficients.size() != p + 1)
            throw CacheCorruptError("cache: expected " + std::to_string(p + 1) + " coefficients", 0);
        if (coefficients.back() != "1") throw CacheCorruptError("cache: polynomial is not monic", 0);
        if (coefficients[p - 1] != "0")
            throw CacheCorruptError("cache: x^{p-1} coefficient must be 0", 0);
    }
};

inline void to_json(nlohmann::json& j, const PolynomialCacheFile& f) {
    j = nlohmann::json{{"format_version", f.format_version},
                       {"p", f.p},
                       {"variable", f.variable},
                       {"coefficients", f.coefficients},
                       {"method", f.method},
                       {"crt_primes", f.crt_primes},
                       {"primitive_root", f.primitive_root}};
}

inline void from_json(const nlohmann::json& j, PolynomialCacheFile& f) {
    j.at("format_version").get_to(f.format_version);
    j.at("p").get_to(f.p);
    j.at("variable").get_to(f.variable);
    j.at("coefficients").get_to(f.coefficients);
    j.at("method").get_to(f.method);
    j.at("crt_primes").get_to(f.crt_primes);
    j.at("primitive_root").get_to(f.primitive_root);
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, unsigned long p) {
    return dir / ("L_" + std::to_string(p) + ".json");
}

/// Atomic store: write to a temp file in the same directory, then rename.
inline void cache_store(const std::filesystem::path& dir, const PolynomialCacheFile& file) {
    std::filesystem::create_directories(dir);
    std::filesystem::path final_path = cache_path(dir, file.p);
    std::filesystem::path tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream out(tmp_path);
        if (!out) throw ComputeError("cache_store: cannot write " + tmp_path.string());
        out << nlohmann::json(file).dump(2) << "\n";
    }
    std::filesystem::rename(tmp_path, final_path);
}

/// Loads L(p,x) from the cache and re-verifies it by reducing modulo one
/// freshly chosen prime q' == 1 (mod p^2) that the stored run did not use;
/// the reduction must match the directly computed period product mod q'.
/// Returns nullopt when no entry exists.
inline std::optional<IntPolynomial> cache_load(const std::filesystem::path& dir, unsigned long p,
                                               uint64_t min_q = uint64_t(1) << 20) {
    std::filesystem::path path = cache_path(dir, p);
    std::ifstream in(path);
    if (!in) return std::nullopt;

    PolynomialCacheFile file;
    try {
        nlohmann::json j;
        in >> j;
        file = j.get<PolynomialCacheFile>();
    } catch (const nlohmann::json::exception& e) {
        throw CacheCorruptError("cache_load: malformed JSON in " + path.string() + ": " + e.what(),
                                0);
    }
    if (file.p != p) throw CacheCorruptError("cache_load: file claims a different p", 0);
    file.validate_shape();

    IntPolynomial L = file.to_poly();
    CrtPrime fresh = fresh_crt_prime(p, file.crt_primes, min_q);
    if (!verify_mod_fresh_prime(L, p, fresh))
        throw CacheCorruptError("cache_load: stored polynomial fails the fresh-prime check at q=" +
                                    std::to_string(fresh.q),
                                fresh.q);
    return L;
}

}  // namespace wilf

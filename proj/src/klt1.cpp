#include "klooster/klt1.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <vector>

namespace klooster {

namespace {

constexpr char kMagic[4] = {'K', 'L', 'T', '1'};

static_assert(std::endian::native == std::endian::little,
              "KLT1 serialization assumes a little-endian host");
static_assert(sizeof(double) == 8 && std::numeric_limits<double>::is_iec559,
              "KLT1 serialization requires IEEE-754 binary64");

}  // namespace

void write_klt1(const std::string& path, const KloostermanTable& table) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("write_klt1: cannot open " + tmp);
        out.write(kMagic, 4);
        const std::uint64_t p = static_cast<std::uint64_t>(table.prime());
        out.write(reinterpret_cast<const char*>(&p), 8);
        const auto& v = table.values();
        out.write(reinterpret_cast<const char*>(v.data()),
                  static_cast<std::streamsize>(v.size() * sizeof(double)));
        if (!out) throw std::runtime_error("write_klt1: short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("write_klt1: rename to " + path + " failed: " + ec.message());
    }
}

KloostermanTable read_klt1(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_klt1: cannot open " + path);

    char magic[4] = {};
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("read_klt1: bad magic in " + path);

    std::uint64_t p_raw = 0;
    in.read(reinterpret_cast<char*>(&p_raw), 8);
    if (!in) throw std::runtime_error("read_klt1: truncated header in " + path);
    if (p_raw < 5 || p_raw > (1ULL << 40))
        throw std::runtime_error("read_klt1: implausible p in " + path);
    const std::int64_t p = static_cast<std::int64_t>(p_raw);
    if (!is_odd_prime(p)) throw std::runtime_error("read_klt1: composite p in " + path);
    PrimeModulus pm(p);

    std::vector<double> values(static_cast<std::size_t>(p - 1));
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(double)));
    if (!in || in.gcount() != static_cast<std::streamsize>(values.size() * sizeof(double)))
        throw std::runtime_error("read_klt1: truncated data in " + path);
    in.peek();
    if (!in.eof()) throw std::runtime_error("read_klt1: trailing bytes in " + path);

    try {
        return KloostermanTable::from_values(pm, std::move(values));
    } catch (const std::exception& e) {
        throw std::runtime_error("read_klt1: " + path + ": " + e.what());
    }
}

}  // namespace klooster

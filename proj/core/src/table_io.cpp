#include "zr/table_io.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace zr {

static_assert(std::endian::native == std::endian::little,
              "table files are little-endian; big-endian hosts unsupported");

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

nlohmann::json shifts_to_json(const ShiftSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (cplx z : s.elems) arr.push_back({z.real(), z.imag()});
    return arr;
}

std::vector<cplx> shifts_from_json(const nlohmann::json& arr) {
    std::vector<cplx> out;
    for (const auto& pair : arr) out.emplace_back(pair.at(0), pair.at(1));
    return out;
}

}  // namespace

void write_table(const CoefficientTable& table, const std::filesystem::path& path) {
    const std::size_t bytes = std::size_t{table.X} * 2 * sizeof(double);
    {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + path.string());
        f.write(reinterpret_cast<const char*>(table.values.data() + 1),
                static_cast<std::streamsize>(bytes));
        if (!f) throw std::runtime_error("short write to " + path.string());
    }
    nlohmann::json side;
    side["A"] = shifts_to_json(table.A);
    side["C"] = shifts_to_json(table.C);
    side["X"] = table.X;
    side["checksum"] = fnv1a64(table.values.data() + 1, bytes);
    std::ofstream sf(path.string() + ".json");
    if (!sf) throw std::runtime_error("cannot open " + path.string() + ".json");
    sf << side.dump(2) << '\n';
}

CoefficientTable read_table(const std::filesystem::path& path) {
    nlohmann::json side;
    {
        std::ifstream sf(path.string() + ".json");
        if (!sf) throw std::runtime_error("missing sidecar for " + path.string());
        sf >> side;
    }
    CoefficientTable t;
    t.A = ShiftSet(shifts_from_json(side.at("A")), Role::A);
    t.C = ShiftSet(shifts_from_json(side.at("C")), Role::C);
    t.X = side.at("X").get<std::uint32_t>();
    t.values.assign(std::size_t{t.X} + 1, cplx{});

    const std::size_t bytes = std::size_t{t.X} * 2 * sizeof(double);
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    f.read(reinterpret_cast<char*>(t.values.data() + 1),
           static_cast<std::streamsize>(bytes));
    if (f.gcount() != static_cast<std::streamsize>(bytes))
        throw std::runtime_error("truncated table " + path.string());
    if (fnv1a64(t.values.data() + 1, bytes) !=
        side.at("checksum").get<std::uint64_t>())
        throw std::runtime_error("checksum mismatch in " + path.string());
    return t;
}

}  // namespace zr

#include "nsest/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace nsest {

namespace {

std::uint64_t to_le_bits(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    if constexpr (std::endian::native == std::endian::big) {
        std::uint64_t r = 0;
        for (int i = 0; i < 8; ++i) r |= ((bits >> (8 * i)) & 0xffu) << (8 * (7 - i));
        bits = r;
    }
    return bits;
}

double from_le_bits(std::uint64_t bits) {
    if constexpr (std::endian::native == std::endian::big) {
        std::uint64_t r = 0;
        for (int i = 0; i < 8; ++i) r |= ((bits >> (8 * i)) & 0xffu) << (8 * (7 - i));
        bits = r;
    }
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

} // namespace

void write_nsfld(const std::string& path, const std::vector<const ScalarField*>& components) {
    if (components.empty()) throw IoError("write_nsfld: no components");
    const Grid& g = components[0]->grid();
    for (const ScalarField* c : components)
        if (c->grid() != g) throw InvalidFieldError("write_nsfld: components on different grids");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_nsfld: cannot open " + path);
    out << "NSFLD1 " << g.n() << " " << g.n() << " " << g.n() << " " << components.size() << "\n";
    std::vector<std::uint64_t> buf;
    for (const ScalarField* c : components) {
        buf.resize(c->size());
        for (std::size_t i = 0; i < c->size(); ++i) buf[i] = to_le_bits((*c)[i]);
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size() * sizeof(std::uint64_t)));
    }
    if (!out) throw IoError("write_nsfld: write failed for " + path);
}

void write_nsfld(const std::string& path, const ScalarField& u) {
    write_nsfld(path, std::vector<const ScalarField*>{&u});
}

void write_nsfld(const std::string& path, const VectorField& u) {
    write_nsfld(path, std::vector<const ScalarField*>{&u[0], &u[1], &u[2]});
}

std::vector<ScalarField> read_nsfld(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_nsfld: cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw IoError("read_nsfld: missing header in " + path);
    std::istringstream hs(header);
    std::string magic;
    long nx = 0, ny = 0, nz = 0, ncomp = 0;
    hs >> magic >> nx >> ny >> nz >> ncomp;
    if (!hs || magic != "NSFLD1")
        throw IoError("read_nsfld: malformed NSFLD1 header in " + path);
    std::string rest;
    if (hs >> rest) throw IoError("read_nsfld: trailing tokens in header of " + path);
    if (nx != ny || ny != nz)
        throw IoError("read_nsfld: non-cubic grid " + std::to_string(nx) + "x" +
                      std::to_string(ny) + "x" + std::to_string(nz));
    if (nx < 5 || ncomp < 1)
        throw IoError("read_nsfld: bad dimensions in header of " + path);

    Grid grid(static_cast<int>(nx));
    const std::size_t count = grid.node_count();
    std::vector<ScalarField> fields;
    std::vector<std::uint64_t> buf(count);
    for (long c = 0; c < ncomp; ++c) {
        in.read(reinterpret_cast<char*>(buf.data()),
                static_cast<std::streamsize>(count * sizeof(std::uint64_t)));
        if (static_cast<std::size_t>(in.gcount()) != count * sizeof(std::uint64_t))
            throw IoError("read_nsfld: truncated payload in " + path);
        std::vector<double> vals(count);
        for (std::size_t i = 0; i < count; ++i) vals[i] = from_le_bits(buf[i]);
        fields.emplace_back(grid, std::move(vals));
    }
    char extra;
    if (in.read(&extra, 1))
        throw IoError("read_nsfld: trailing bytes in " + path);
    return fields;
}

VectorField read_nsfld_vector(const std::string& path) {
    auto fields = read_nsfld(path);
    if (fields.size() != 3)
        throw IoError("read_nsfld_vector: expected 3 components, got " +
                      std::to_string(fields.size()));
    return VectorField(std::move(fields[0]), std::move(fields[1]), std::move(fields[2]));
}

ScalarField read_nsfld_scalar(const std::string& path) {
    auto fields = read_nsfld(path);
    if (fields.size() != 1)
        throw IoError("read_nsfld_scalar: expected 1 component, got " +
                      std::to_string(fields.size()));
    return std::move(fields[0]);
}

} // namespace nsest

#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kappa/errors.hpp"
#include "kappa/grid_function.hpp"

namespace kappa {

/// On-disk layout: [uint32 little-endian header length][UTF-8 JSON header]
/// [complex64 samples, axis-0 major, little-endian float32 re/im pairs].
inline void save_grid_function(const GridFunction& f, const std::string& path) {
    nlohmann::json header;
    header["format"] = "kappa-grid-v1";
    header["n"] = f.cfg.n;
    header["lambda"] = f.cfg.lambda;
    header["band_limit"] = f.band_limit;
    header["axes"] = nlohmann::json::array();
    for (const auto& ax : f.axes)
        header["axes"].push_back({{"x0", ax.x0}, {"h", ax.h}, {"npts", ax.npts}});
    const std::string htext = header.dump();

    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open '" + path + "' for writing");
    std::uint32_t hlen = static_cast<std::uint32_t>(htext.size());
    unsigned char lenbuf[4] = {static_cast<unsigned char>(hlen & 0xff),
                               static_cast<unsigned char>((hlen >> 8) & 0xff),
                               static_cast<unsigned char>((hlen >> 16) & 0xff),
                               static_cast<unsigned char>((hlen >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(lenbuf), 4);
    out.write(htext.data(), static_cast<std::streamsize>(htext.size()));

    std::vector<unsigned char> payload(f.samples.size() * 8);
    for (std::size_t i = 0; i < f.samples.size(); ++i) {
        float re = static_cast<float>(f.samples[i].real());
        float im = static_cast<float>(f.samples[i].imag());
        std::uint32_t ure, uim;
        std::memcpy(&ure, &re, 4);
        std::memcpy(&uim, &im, 4);
        for (int b = 0; b < 4; ++b) {
            payload[8 * i + b] = static_cast<unsigned char>((ure >> (8 * b)) & 0xff);
            payload[8 * i + 4 + b] = static_cast<unsigned char>((uim >> (8 * b)) & 0xff);
        }
    }
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    if (!out) throw error("short write to '" + path + "'");
}

inline GridFunction load_grid_function(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path + "' for reading");
    unsigned char lenbuf[4];
    in.read(reinterpret_cast<char*>(lenbuf), 4);
    if (!in) throw error("truncated grid file '" + path + "'");
    std::uint32_t hlen = static_cast<std::uint32_t>(lenbuf[0]) |
                         (static_cast<std::uint32_t>(lenbuf[1]) << 8) |
                         (static_cast<std::uint32_t>(lenbuf[2]) << 16) |
                         (static_cast<std::uint32_t>(lenbuf[3]) << 24);
    std::string htext(hlen, '\0');
    in.read(htext.data(), static_cast<std::streamsize>(hlen));
    if (!in) throw error("truncated grid header in '" + path + "'");
    nlohmann::json header = nlohmann::json::parse(htext);
    if (header.value("format", "") != std::string("kappa-grid-v1"))
        throw error("unrecognized grid file format in '" + path + "'");

    GridFunction f;
    f.cfg.n = header.at("n").get<int>();
    f.cfg.lambda = header.at("lambda").get<double>();
    f.band_limit = header.at("band_limit").get<double>();
    for (const auto& j : header.at("axes")) {
        GridAxis ax;
        ax.x0 = j.at("x0").get<double>();
        ax.h = j.at("h").get<double>();
        ax.npts = j.at("npts").get<int>();
        f.axes.push_back(ax);
    }
    f.samples.resize(f.size());
    std::vector<unsigned char> payload(f.samples.size() * 8);
    in.read(reinterpret_cast<char*>(payload.data()),
            static_cast<std::streamsize>(payload.size()));
    if (!in) throw error("truncated sample payload in '" + path + "'");
    for (std::size_t i = 0; i < f.samples.size(); ++i) {
        std::uint32_t ure = 0, uim = 0;
        for (int b = 0; b < 4; ++b) {
            ure |= static_cast<std::uint32_t>(payload[8 * i + b]) << (8 * b);
            uim |= static_cast<std::uint32_t>(payload[8 * i + 4 + b]) << (8 * b);
        }
        float re, im;
        std::memcpy(&re, &ure, 4);
        std::memcpy(&im, &uim, 4);
        f.samples[i] = {static_cast<double>(re), static_cast<double>(im)};
    }
    f.validate_geometry();
    return f;
}

}  // namespace kappa

#include "report.hpp"

#include <framekit/error.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <memory>

namespace framekit::cli {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        throw Error(ErrorKind::IdentityMismatch, "report contains a non-finite number");
    }
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    std::string s(buf.data());
    if (s.find_first_of(".eE") == std::string::npos) {
        s += ".0";
    }
    return s;
}

void write(const nlohmann::json& node, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
    switch (node.type()) {
    case nlohmann::json::value_t::object: {
        if (node.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : node.items()) {
            if (!first) {
                out += ",\n";
            }
            first = false;
            out += pad + nlohmann::json(key).dump() + ": ";
            write(value, out, depth + 1);
        }
        out += "\n" + close_pad + "}";
        return;
    }
    case nlohmann::json::value_t::array: {
        if (node.empty()) {
            out += "[]";
            return;
        }
        // Rows of scalars (or of [re, im] pairs) stay on one line.
        auto is_pair = [](const nlohmann::json& e) {
            return e.is_array() && e.size() == 2 && e[0].is_primitive() && e[1].is_primitive();
        };
        const bool flat = std::all_of(node.begin(), node.end(), [](const nlohmann::json& e) { return e.is_primitive(); }) ||
                          std::all_of(node.begin(), node.end(), is_pair);
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < node.size(); ++i) {
                if (i > 0) {
                    out += ", ";
                }
                write(node[i], out, depth + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < node.size(); ++i) {
            if (i > 0) {
                out += ",\n";
            }
            out += pad;
            write(node[i], out, depth + 1);
        }
        out += "\n" + close_pad + "]";
        return;
    }
    case nlohmann::json::value_t::number_float:
        out += format_double(node.get<double>());
        return;
    default:
        out += node.dump();
        return;
    }
}

} // namespace

std::string dump_report(const nlohmann::json& report) {
    std::string out;
    write(report, out, 0);
    out += "\n";
    return out;
}

std::string sha256_hex(std::string_view bytes) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
        throw Error(ErrorKind::InvalidArgument, "SHA-256 computation failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

} // namespace framekit::cli

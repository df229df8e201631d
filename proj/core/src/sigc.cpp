/*
   Copyright 2026 The sigmacode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iterator>

#include <json.hpp>

#include "sigmacode/codes.hpp"
#include "sigmacode/error.hpp"

namespace sigmacode::sigc {

namespace {

constexpr std::size_t kHeader = 20;
constexpr std::uint8_t kVersion = 0x01;

void put(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
    for (int k = 0; k < bytes; ++k) out.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

std::uint64_t get(std::span<const std::uint8_t> in, std::size_t at, int bytes) {
    std::uint64_t v = 0;
    for (int k = 0; k < bytes; ++k) v |= static_cast<std::uint64_t>(in[at + static_cast<std::size_t>(k)]) << (8 * k);
    return v;
}

}  // namespace

std::vector<std::uint8_t> encode(const SigmaCode& code) {
    if (code.q > kMaxCodeAlphabet) throw Error(ErrorCode::SymbolOutOfRange, "q > 254");
    std::vector<std::uint8_t> out{'S', 'I', 'G', 'C', kVersion};
    out.reserve(kHeader + code.words.size());
    put(out, code.q, 2);
    out.push_back(code.has_infinity_word ? 1 : 0);
    put(out, code.n, 4);
    put(out, code.size(), 8);
    out.insert(out.end(), code.words.begin(), code.words.end());
    return out;
}

SigmaCode decode(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4) throw Error(ErrorCode::TruncatedFile, "missing magic");
    if (bytes[0] != 'S' || bytes[1] != 'I' || bytes[2] != 'G' || bytes[3] != 'C')
        throw Error(ErrorCode::BadMagic, "not a SIGC file");
    if (bytes.size() < 5) throw Error(ErrorCode::TruncatedFile, "missing version");
    if (bytes[4] != kVersion) throw Error(ErrorCode::BadVersion, "version " + std::to_string(bytes[4]));
    if (bytes.size() < kHeader) throw Error(ErrorCode::TruncatedFile, "short header");
    SigmaCode code;
    const std::uint64_t q = get(bytes, 5, 2);
    if (q < 2 || q > kMaxCodeAlphabet) throw Error(ErrorCode::SymbolOutOfRange, "alphabet size " + std::to_string(q));
    code.q = static_cast<std::uint32_t>(q);
    code.has_infinity_word = (bytes[7] & 1) != 0;
    code.n = static_cast<std::uint32_t>(get(bytes, 8, 4));
    const std::uint64_t m = get(bytes, 12, 8);
    if (m == 0 || code.n == 0) throw Error(ErrorCode::TruncatedFile, "no codewords");
    const std::uint64_t body = bytes.size() - kHeader;
    if (m > body / code.n || m * code.n != body) throw Error(ErrorCode::TruncatedFile, "symbol count does not match M*n");
    code.words.assign(bytes.begin() + kHeader, bytes.end());
    for (std::size_t k = 0; k < code.words.size(); ++k) {
        const std::uint8_t s = code.words[k];
        if (s != kInfinitySymbol && s >= code.q)
            throw Error(ErrorCode::SymbolOutOfRange, "symbol " + std::to_string(s) + " at offset " +
                                                         std::to_string(kHeader + k));
    }
    return code;
}

void write(const SigmaCode& code, const std::string& path) {
    const auto bytes = encode(code);
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
}

SigmaCode read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode(bytes);
}

std::string metadata_json(const CodeMetadata& meta) {
    nlohmann::ordered_json j;
    j["curve"] = meta.curve;
    j["D"] = meta.divisor;
    j["m"] = meta.m;
    j["s"] = meta.s;
    j["policy"] = std::string(to_string(meta.policy));
    j["genus"] = meta.genus;
    j["distance_downgrade"] = meta.distance_downgrade;
    j["stratum_counts"] = meta.stratum_counts;
    j["closed_form_checked"] = meta.closed_form_checked;
    j["zeta"] = nlohmann::ordered_json::parse(zeta::to_json(meta.lpoly, zeta::effective_counts(meta.lpoly, meta.s)));
    return j.dump(2) + "\n";
}

CodeMetadata metadata_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        CodeMetadata meta;
        meta.curve = j.at("curve").get<std::string>();
        meta.divisor = j.at("D").get<std::string>();
        meta.m = j.at("m").get<long long>();
        meta.s = j.at("s").get<unsigned>();
        meta.policy = parse_policy(j.at("policy").get<std::string>());
        meta.genus = j.at("genus").get<unsigned>();
        meta.distance_downgrade = j.at("distance_downgrade").get<unsigned>();
        meta.stratum_counts = j.at("stratum_counts").get<std::vector<std::uint64_t>>();
        meta.closed_form_checked = j.at("closed_form_checked").get<bool>();
        meta.lpoly = zeta::lpoly_from_json(j.at("zeta").dump());
        return meta;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("code metadata: ") + e.what());
    }
}

}  // namespace sigmacode::sigc

#include "nclab/network.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace nclab {

const char* to_string(NetClass c) {
    switch (c) {
        case NetClass::Normal: return "normal";
        case NetClass::Trivial: return "trivial";
        case NetClass::Unsolvable: return "unsolvable";
    }
    return "?";
}

NetworkSpec build_network(uint32_t h, uint32_t r, uint32_t ell, uint32_t eps, uint32_t alpha) {
    if (h < 1) throw std::invalid_argument("build_network: h must be >= 1");
    if (ell < 1) throw std::invalid_argument("build_network: ell must be >= 1");
    if (alpha < 1) throw std::invalid_argument("build_network: alpha must be >= 1");
    if (r < alpha) throw std::invalid_argument("build_network: r must be >= alpha");
    return NetworkSpec{h, r, ell, eps, alpha};
}

std::string network_to_text(const NetworkFile& nf) {
    std::ostringstream os;
    os << "h: " << nf.spec.h << '\n'
       << "r: " << nf.spec.r << '\n'
       << "ell: " << nf.spec.ell << '\n'
       << "eps: " << nf.spec.eps << '\n'
       << "alpha: " << nf.spec.alpha << '\n'
       << "q: " << nf.q << '\n'
       << "t: " << nf.t << '\n';
    return os.str();
}

NetworkFile network_from_text(const std::string& text) {
    std::map<std::string, uint64_t> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("network file: malformed line '" + line + "'");
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        auto strip = [](std::string& s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        strip(key);
        strip(val);
        if (key != "h" && key != "r" && key != "ell" && key != "eps" && key != "alpha" &&
            key != "q" && key != "t")
            throw std::invalid_argument("network file: unknown key '" + key + "'");
        if (kv.count(key)) throw std::invalid_argument("network file: duplicate key '" + key + "'");
        size_t pos = 0;
        unsigned long long v;
        try {
            v = std::stoull(val, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("network file: bad value for '" + key + "'");
        }
        if (pos != val.size()) throw std::invalid_argument("network file: bad value for '" + key + "'");
        kv[key] = v;
    }
    for (const char* key : {"h", "r", "ell", "eps", "alpha", "q", "t"}) {
        if (!kv.count(key))
            throw std::invalid_argument(std::string("network file: missing key '") + key + "'");
    }
    NetworkFile nf;
    nf.spec = build_network(static_cast<uint32_t>(kv["h"]), static_cast<uint32_t>(kv["r"]),
                            static_cast<uint32_t>(kv["ell"]), static_cast<uint32_t>(kv["eps"]),
                            static_cast<uint32_t>(kv["alpha"]));
    nf.q = kv["q"];
    nf.t = static_cast<uint32_t>(kv["t"]);
    if (nf.t < 1) throw std::invalid_argument("network file: t must be >= 1");
    if (!as_prime_power(nf.q)) throw std::invalid_argument("network file: q must be a prime power");
    return nf;
}

}  // namespace nclab

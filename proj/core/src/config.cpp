#include "ellhyp/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ellhyp/errors.hpp"

namespace ellhyp {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double number(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseError("cannot parse " + what + " '" + text + "'");
    }
    if (used != text.size()) throw ParseError("cannot parse " + what + " '" + text + "'");
    return v;
}

long long integer(const std::string& text, const std::string& key) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw ParseError("config: '" + key + "' needs an integer, got '" + text + "'");
    }
    if (used != text.size()) throw ParseError("config: '" + key + "' needs an integer, got '" + text + "'");
    return v;
}

bool boolean(const std::string& text, const std::string& key) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ParseError("config: '" + key + "' needs true or false, got '" + text + "'");
}

// "", "+", "-" stand for ±1 in front of i
double imag_part(const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return number(s, "imaginary part");
}

}  // namespace

cplx parse_complex(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw ParseError("empty complex value");
    if (auto at = s.find('@'); at != std::string::npos)
        return std::polar(number(trim(s.substr(0, at)), "modulus"), number(trim(s.substr(at + 1)), "phase"));
    if (s.back() != 'i' && s.back() != 'j') return {number(s, "real value"), 0.0};
    s.pop_back();
    // split at the last sign that is not a leading sign or an exponent sign
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
            return {number(trim(s.substr(0, k)), "real part"), imag_part(trim(s.substr(k)))};
    }
    return {0.0, imag_part(s)};
}

std::string format_complex(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        if (key.empty()) throw ParseError("config line " + std::to_string(lineno) + ": empty key");
        kv[key] = trim(t.substr(eq + 1));
    }
    return kv;
}

void apply_config(SuiteConfig& cfg, const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "select") {
            cfg.select.clear();
            std::istringstream in(value);
            std::string g;
            while (std::getline(in, g, ','))
                if (!trim(g).empty()) cfg.select.push_back(trim(g));
        } else if (key == "reps") {
            cfg.reps = static_cast<int>(integer(value, key));
            if (cfg.reps < 1) throw ParseError("config: reps must be at least 1");
        } else if (key == "seed_offset") {
            cfg.seed_offset = integer(value, key);
        } else if (key == "tol_scale") {
            cfg.tol_scale = number(value, key);
            if (!(cfg.tol_scale > 0)) throw ParseError("config: tol_scale must be positive");
        } else if (key.rfind("tol.", 0) == 0) {
            double tol = number(value, key);
            if (!(tol > 0)) throw ParseError("config: " + key + " must be positive");
            cfg.family_tol[key.substr(4)] = tol;
        } else if (key == "max_n") {
            cfg.max_n = static_cast<int>(integer(value, key));
        } else if (key == "max_N") {
            cfg.max_N = static_cast<int>(integer(value, key));
        } else if (key == "nome_lo") {
            cfg.nome_lo = number(value, key);
        } else if (key == "nome_hi") {
            cfg.nome_hi = number(value, key);
        } else if (key == "threads") {
            cfg.threads = static_cast<int>(integer(value, key));
        } else if (key == "timing") {
            cfg.timing = boolean(value, key);
        } else if (key == "perturb_solved") {
            cfg.perturb_solved = boolean(value, key);
        } else {
            throw ParseError("config: unknown key '" + key + "'");
        }
    }
}

SuiteConfig load_config_file(const std::string& path, SuiteConfig base) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    apply_config(base, parse_key_values(ss.str()));
    return base;
}

}  // namespace ellhyp

#include "modwave/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace modwave {

double auto_cauchy_t0(const MaterialHalfSpaces& material, double gap) {
    return (material.x0 - gap) / material.c_minus;
}

Simulation ExperimentConfig::make_simulation(SimulationOptions extra) const {
    validate();
    extra.boundary = boundary;
    extra.esim = esim;
    if (extra.receivers.empty()) extra.receivers = receivers;
    return Simulation(material, law, source, make_grid(), extra);
}

void ExperimentConfig::validate() const {
    material.validate();
    law.validate();
    source.validate();
    if (!(L > 0.0)) throw ConfigError("config: L must be positive");
    if (Nx < 8) throw ConfigError("config: Nx must be at least 8");
    if (!(zeta > 0.0) || zeta > 1.0) throw ConfigError("config: zeta must be in (0, 1]");
    if (!(t_end > 0.0)) throw ConfigError("config: t_end must be positive");
    if (esim.k % 2 == 0 || esim.k < 1 || esim.k > 5)
        throw ConfigError("config: ESIM order k must be odd and within [1, 5]");
    if (esim.q < (esim.k + 1) / 2) throw ConfigError("config: need q >= (k+1)/2 fit nodes");
    if (!law.is_zero() && !(material.x0 > 0.0 && material.x0 < L))
        throw ConfigError("config: interface position x0 must lie inside the domain");
    for (double r : receivers)
        if (!(r > 0.0) || !(r < L)) throw ConfigError("config: receiver position outside domain");
    if (!source.is_cauchy()) {
        const double xs = source.dirac().x_s;
        if (!(xs > 0.0) || !(xs < L)) throw ConfigError("config: source position outside domain");
    }
}

namespace {

struct Parser {
    ExperimentConfig cfg;
    std::string section;
    int line_no = 0;
    bool t0_given = false;
    bool have_C0 = false, have_K0 = false;
    double eps_all = 0.0;
    bool eps_all_given = false;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError("config line " + std::to_string(line_no) + ": " + msg);
    }

    double to_double(const std::string& v) const {
        try {
            size_t pos = 0;
            const double x = std::stod(v, &pos);
            while (pos < v.size() && std::isspace(static_cast<unsigned char>(v[pos]))) ++pos;
            if (pos != v.size()) fail("expected a number, got '" + v + "'");
            return x;
        } catch (const ConfigError&) {
            throw;
        } catch (...) {
            fail("expected a number, got '" + v + "'");
        }
    }

    int to_int(const std::string& v) const {
        const double x = to_double(v);
        if (x != std::floor(x)) fail("expected an integer, got '" + v + "'");
        return static_cast<int>(x);
    }

    bool to_bool(const std::string& v) const {
        if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
        if (v == "false" || v == "0" || v == "no" || v == "off") return false;
        fail("expected a boolean, got '" + v + "'");
    }

    std::vector<double> to_list(const std::string& v) const {
        std::vector<double> out;
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(to_double(item));
        return out;
    }

    void set(const std::string& key, const std::string& value) {
        auto& c = cfg;
        if (section == "material") {
            if (key == "rho") c.material.rho_minus = c.material.rho_plus = to_double(value);
            else if (key == "c") c.material.c_minus = c.material.c_plus = to_double(value);
            else if (key == "rho_minus") c.material.rho_minus = to_double(value);
            else if (key == "rho_plus") c.material.rho_plus = to_double(value);
            else if (key == "c_minus") c.material.c_minus = to_double(value);
            else if (key == "c_plus") c.material.c_plus = to_double(value);
            else if (key == "x0") c.material.x0 = to_double(value);
            else fail("unknown key '" + key + "' in [material]");
        } else if (section == "interface") {
            if (key == "C0") { c.law.C0 = to_double(value); have_C0 = true; }
            else if (key == "K0") {
                const double k0 = to_double(value);
                if (!(k0 > 0.0)) fail("K0 must be positive (use C0 = 0 for a rigid contact)");
                c.law.C0 = 1.0 / k0;
                have_K0 = true;
            }
            else if (key == "M0") c.law.M0 = to_double(value);
            else if (key == "QC0") c.law.QC0 = to_double(value);
            else if (key == "QM0") c.law.QM0 = to_double(value);
            else if (key == "eps_C") c.law.eps_C = to_double(value);
            else if (key == "eps_M") c.law.eps_M = to_double(value);
            else if (key == "eps_QC") c.law.eps_QC = to_double(value);
            else if (key == "eps_QM") c.law.eps_QM = to_double(value);
            else if (key == "eps") { eps_all = to_double(value); eps_all_given = true; }
            else if (key == "f_m") c.law.f_m = to_double(value);
            else if (key == "nu") c.law.kind.nu = to_double(value);
            else if (key == "allow_unstable") c.law.allow_unstable = to_bool(value);
            else if (key == "kind") {
                if (value == "sinusoidal") c.law.kind.shape = ModulationKind::Sinusoidal;
                else if (value == "quasi-periodic" || value == "quasiperiodic")
                    c.law.kind.shape = ModulationKind::QuasiPeriodic;
                else if (value == "rectangular") c.law.kind.shape = ModulationKind::Rectangular;
                else fail("unknown modulation kind '" + value + "'");
            }
            else fail("unknown key '" + key + "' in [interface]");
        } else if (section == "source") {
            if (key == "f_c") c.source.f_c = to_double(value);
            else if (key == "amplitude") c.source.amplitude = to_double(value);
            else if (key == "type") {
                if (value == "cauchy") c.source.forcing = CauchyPulse{};
                else if (value == "dirac") c.source.forcing = DiracPoint{};
                else fail("source type must be 'cauchy' or 'dirac'");
            }
            else if (key == "t0") { t0_given = true; t0_value = to_double(value); }
            else if (key == "x_s") x_s_value = to_double(value), x_s_given = true;
            else fail("unknown key '" + key + "' in [source]");
        } else if (section == "grid") {
            if (key == "L") c.L = to_double(value);
            else if (key == "Nx") c.Nx = to_int(value);
            else if (key == "zeta") c.zeta = to_double(value);
            else fail("unknown key '" + key + "' in [grid]");
        } else if (section == "run") {
            if (key == "t_end") c.t_end = to_double(value);
            else if (key == "k") c.esim.k = to_int(value);
            else if (key == "q") c.esim.q = to_int(value);
            else if (key == "frozen_derivatives") c.esim.frozen_derivatives = to_bool(value);
            else if (key == "receivers") c.receivers = to_list(value);
            else if (key == "out_dir") c.out_dir = value;
            else if (key == "scenario") c.scenario = value;
            else if (key == "boundary") {
                if (value == "absorbing") c.boundary = BoundaryPolicy::Absorbing;
                else if (value == "reflecting-zero") c.boundary = BoundaryPolicy::ReflectingZero;
                else fail("boundary must be 'absorbing' or 'reflecting-zero'");
            }
            else fail("unknown key '" + key + "' in [run]");
        } else {
            fail("key '" + key + "' outside of any known section");
        }
    }

    double t0_value = 0.0;
    double x_s_value = 0.0;
    bool x_s_given = false;
};

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    Parser p;
    std::stringstream ss(text);
    std::string raw;
    while (std::getline(ss, raw)) {
        ++p.line_no;
        std::string line = raw;
        const size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') p.fail("malformed section header");
            p.section = trim(line.substr(1, line.size() - 2));
            if (p.section != "material" && p.section != "interface" && p.section != "source" &&
                p.section != "grid" && p.section != "run")
                p.fail("unknown section [" + p.section + "]");
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) p.fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) p.fail("expected 'key = value'");
        p.set(key, value);
    }

    if (p.have_C0 && p.have_K0)
        throw ConfigError("config: specify either C0 or K0, not both");
    if (p.eps_all_given) {
        if (p.cfg.law.eps_C == 0.0) p.cfg.law.eps_C = p.eps_all;
        if (p.cfg.law.eps_M == 0.0) p.cfg.law.eps_M = p.eps_all;
    }

    ExperimentConfig& cfg = p.cfg;
    if (cfg.source.is_cauchy()) {
        CauchyPulse pulse;
        pulse.t0 = p.t0_given ? p.t0_value : auto_cauchy_t0(cfg.material);
        cfg.source.forcing = pulse;
    } else {
        DiracPoint dp;
        dp.x_s = p.x_s_given ? p.x_s_value : 150.0;
        cfg.source.forcing = dp;
    }

    cfg.validate();
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace modwave

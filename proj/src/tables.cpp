#include "voigt/tables.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "checkpoint layout is little-endian");

namespace voigt {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = {}) {
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = {}) {
    std::ifstream in(path, mode);
    if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
    return in;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

constexpr const char* kDiagHeader =
    "t,l2_energy,scaled_enstrophy,alpha_energy,grad_norm,vort_max,dissipation,running_sup_grad";

}  // namespace

void write_diagnostics_csv(const std::filesystem::path& path, const DiagnosticSeries& s) {
    auto out = open_out(path);
    out << kDiagHeader << '\n';
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << format_double(s.times[i]) << ',' << format_double(s.l2_energy[i]) << ','
            << format_double(s.scaled_enstrophy[i]) << ',' << format_double(s.alpha_energy[i])
            << ',' << format_double(s.grad_norm[i]) << ',' << format_double(s.vort_max[i]) << ','
            << format_double(s.dissipation[i]) << ',' << format_double(s.running_sup_grad[i])
            << '\n';
    }
    finish(out, path);
}

DiagnosticSeries read_diagnostics_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line != kDiagHeader)
        throw std::runtime_error("'" + path.string() + "': not a diagnostics table");
    DiagnosticSeries s;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        DiagnosticRecord r;
        double* fields[] = {&r.t,         &r.l2_energy, &r.scaled_enstrophy,
                            &r.alpha_energy, &r.grad_norm, &r.vort_max,
                            &r.dissipation,  &r.running_sup_grad};
        std::stringstream row(line);
        std::string cell;
        for (double* f : fields) {
            if (!std::getline(row, cell, ','))
                throw std::runtime_error("'" + path.string() + "': short row");
            *f = std::strtod(cell.c_str(), nullptr);
        }
        s.push(r);
    }
    return s;
}

void write_spectrum_csv(const std::filesystem::path& path, const std::vector<double>& shells) {
    auto out = open_out(path);
    out << "kappa,E_kappa\n";
    for (std::size_t k = 0; k < shells.size(); ++k)
        out << (k + 1) << ',' << format_double(shells[k]) << '\n';
    finish(out, path);
}

void write_slope_csv(const std::filesystem::path& path, const SlopeTable& table) {
    auto out = open_out(path);
    out << "T,alpha_lo,alpha_hi,slope,p_estimate\n";
    for (std::size_t i = 0; i < table.slopes.size(); ++i)
        for (std::size_t j = 0; j < table.t_grid.size(); ++j) {
            out << format_double(table.t_grid[j]) << ',' << format_double(table.alphas[i]) << ','
                << format_double(table.alphas[i + 1]) << ',' << format_double(table.slopes[i][j])
                << ',';
            if (i == 0) out << format_double(table.p_estimate[j]);
            out << '\n';
        }
    finish(out, path);
}

void write_verdict_csv(const std::filesystem::path& path,
                       const std::vector<std::pair<double, Verdict>>& verdicts) {
    auto out = open_out(path);
    out << "nu,blow_up_indicated,earliest_T,min_slope\n";
    for (const auto& [nu, v] : verdicts) {
        out << format_double(nu) << ',' << (v.blow_up_indicated ? "true" : "false") << ',';
        if (v.earliest_t) out << format_double(*v.earliest_t);
        out << ',' << format_double(v.min_slope) << '\n';
    }
    finish(out, path);
}

void write_smin_csv(const std::filesystem::path& path, const SminTable& table) {
    auto out = open_out(path);
    out << "nu,s_min,mode\n";
    const char* mode = table.mode == SminMode::LogLog ? "loglog" : "literal";
    for (std::size_t i = 0; i < table.nus.size(); ++i)
        out << format_double(table.nus[i]) << ',' << format_double(table.s_min[i]) << ',' << mode
            << '\n';
    finish(out, path);
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt) {
    auto out = open_out(path, std::ios::binary);
    const GridSpec& g = ckpt.field.grid();
    out << "voigt-checkpoint 1\n";
    out << "model = " << (ckpt.model == VoigtParams::Model::EulerVoigt3D ? "ev3d" : "bbm") << '\n';
    out << "n =";
    for (int a = 0; a < g.dim; ++a) out << ' ' << g.n[a];
    out << '\n';
    out << "length =";
    for (int a = 0; a < g.dim; ++a) out << ' ' << format_double(g.length[a]);
    out << '\n';
    out << "alpha = " << format_double(ckpt.alpha) << '\n';
    out << "nu = " << format_double(ckpt.nu) << '\n';
    out << "t = " << format_double(ckpt.t) << '\n';
    out << "components = " << ckpt.field.components() << '\n';
    out << "data\n";
    for (int c = 0; c < ckpt.field.components(); ++c) {
        auto span = ckpt.field.component(c);
        out.write(reinterpret_cast<const char*>(span.data()),
                  static_cast<std::streamsize>(span.size() * sizeof(std::complex<double>)));
    }
    finish(out, path);
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
    auto in = open_in(path, std::ios::binary);
    std::string line;
    if (!std::getline(in, line) || line != "voigt-checkpoint 1")
        throw std::runtime_error("'" + path.string() + "': not a checkpoint file");

    Checkpoint ckpt;
    GridSpec g;
    int components = 0;
    while (std::getline(in, line) && line != "data") {
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("'" + path.string() + "': malformed checkpoint header");
        std::string key = line.substr(0, eq);
        while (!key.empty() && key.back() == ' ') key.pop_back();
        std::stringstream value(line.substr(eq + 1));
        if (key == "model") {
            std::string m;
            value >> m;
            ckpt.model = m == "ev3d" ? VoigtParams::Model::EulerVoigt3D
                                     : VoigtParams::Model::BBM1D;
        } else if (key == "n") {
            std::vector<int> ns;
            int v;
            while (value >> v) ns.push_back(v);
            g.dim = static_cast<int>(ns.size());
            for (std::size_t a = 0; a < ns.size(); ++a) g.n[a] = ns[a];
        } else if (key == "length") {
            double v;
            int a = 0;
            while (value >> v) g.length[a++] = v;
        } else if (key == "alpha") {
            value >> ckpt.alpha;
        } else if (key == "nu") {
            value >> ckpt.nu;
        } else if (key == "t") {
            value >> ckpt.t;
        } else if (key == "components") {
            value >> components;
        }
    }
    if (line != "data")
        throw std::runtime_error("'" + path.string() + "': checkpoint data marker missing");
    ckpt.field = SpectralField(g, components);
    for (int c = 0; c < components; ++c) {
        auto span = ckpt.field.component(c);
        in.read(reinterpret_cast<char*>(span.data()),
                static_cast<std::streamsize>(span.size() * sizeof(std::complex<double>)));
        if (!in) throw std::runtime_error("'" + path.string() + "': truncated checkpoint");
    }
    return ckpt;
}

}  // namespace voigt

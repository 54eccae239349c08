#include "stagflow/io.hpp"

#include <cstdio>
#include <fstream>

namespace stagflow {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_diagnostics_csv(const std::string& path,
                           std::span<const DiagnosticsRecord> records) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path + " for writing");
    out << "t,mean_u,min_dxu,max_dxu,c1_norm_u,uxx_norm,f_value,dt_u_sup\n";
    for (const auto& r : records) {
        out << format_double(r.t) << ',' << format_double(r.mean_u) << ','
            << format_double(r.min_dxu) << ',' << format_double(r.max_dxu) << ','
            << format_double(r.c1_norm_u) << ',' << format_double(r.uxx_norm)
            << ',' << format_double(r.f_value) << ',' << format_double(r.dt_u_sup)
            << '\n';
    }
}

void write_twophase_csv(const std::string& path,
                        std::span<const TwoPhaseRecord> records) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path + " for writing");
    out << "t,p,q,phi,psi,alpha,int_p,int_q,N_residual,partition_residual\n";
    for (const auto& r : records) {
        out << format_double(r.t) << ',' << format_double(r.p) << ','
            << format_double(r.q) << ',' << format_double(r.phi) << ','
            << format_double(r.psi) << ',' << format_double(r.alpha) << ','
            << format_double(r.int_p) << ',' << format_double(r.int_q) << ','
            << format_double(r.n_residual) << ','
            << format_double(r.partition_residual) << '\n';
    }
}

}  // namespace stagflow

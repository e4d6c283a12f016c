#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "windfit/diagnostics.hpp"
#include "windfit/estimation.hpp"

// Line-delimited fit report with a fixed field order and 10 significant
// digits, so identical runs produce byte-identical files.

namespace windfit {

inline std::string fmt_g10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct ReportContext {
    std::string input;
    std::string column;
    std::string mode;
    std::size_t n = 0;
    std::size_t dropped_zeros = 0;
};

inline std::string format_fit_report(const ReportContext& ctx,
                                     const std::vector<FittedModel>& models,
                                     const FitComparison& comparison) {
    std::string out;
    out += "windfit-report 1\n";
    out += "input=" + ctx.input + "\n";
    out += "column=" + ctx.column + "\n";
    out += "mode=" + ctx.mode + "\n";
    out += "n=" + std::to_string(ctx.n) + "\n";
    out += "dropped_zeros=" + std::to_string(ctx.dropped_zeros) + "\n";

    for (const FittedModel& m : models) {
        const ModelDiagnostics* diag = nullptr;
        for (const ModelDiagnostics& d : comparison.per_model)
            if (d.kind == m.spec.kind && d.mode == m.spec.mode) diag = &d;

        out += "model kind=" + std::string(kind_name(m.spec.kind));
        out += " mode=" + std::string(mode_name(m.spec.mode));
        out += " alpha=" + fmt_g10(m.params.alpha);
        out += " beta=" + (m.params.beta ? fmt_g10(*m.params.beta) : std::string("-"));
        out += " loc=" + fmt_g10(m.params.loc);
        out += " scale=" + fmt_g10(m.params.scale);
        out += " log_likelihood=" + fmt_g10(m.log_likelihood);
        out += " aic=" + fmt_g10(m.aic);
        out += " ks=" + (diag ? fmt_g10(diag->ks_statistic) : std::string("-"));
        out += " qq_max_dev=" + (diag ? fmt_g10(diag->max_abs_dev) : std::string("-"));
        out += " qq_tail_dev=" + (diag ? fmt_g10(diag->tail_abs_dev) : std::string("-"));
        out += " converged=" + std::string(m.converged ? "1" : "0");
        out += " iterations=" + std::to_string(m.iterations);
        out += "\n";
    }

    out += "ranking=";
    for (std::size_t i = 0; i < comparison.ranking.size(); ++i) {
        if (i > 0) out += ",";
        out += kind_name(comparison.ranking[i]);
    }
    out += "\n";
    out += "winner=" + std::string(kind_name(comparison.winner)) + "\n";
    out += "tail_winner=" + std::string(kind_name(comparison.tail_winner)) + "\n";
    return out;
}

}  // namespace windfit

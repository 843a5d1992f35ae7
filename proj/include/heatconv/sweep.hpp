#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heatconv/model.hpp"

namespace heatconv {

enum class Method { Secular, Oracle, Variational, FirstApprox };

/// A solver choice plus its discretization knob.
struct SolverSpec {
    Method method = Method::Secular;
    int truncation = 8;   ///< secular sine modes K
    int resolution = 64;  ///< oracle collocation order
    int basis_size = 2;   ///< variational trial functions per field
};

std::string method_tag(const SolverSpec& spec);
std::optional<Method> parse_method(const std::string& name);

/// K (secular/variational) or grid resolution (oracle); 0 for first-approx.
int method_order(const SolverSpec& spec);

/// One Ra evaluation at wavenumber a, heating rate N. Throws on failure.
double evaluate_rayleigh(double a, double n_rate, const SolverSpec& spec);

struct NeutralPoint {
    double a = 0.0;
    double n_rate = 0.0;
    double rayleigh = 0.0;
    std::string method;
    bool ok = true;
    std::string error;
};

/// Uniform scan of Ra(a) at fixed N, sorted by a. Per-point failures are
/// recorded and the sweep continues.
std::vector<NeutralPoint> neutral_curve(double n_rate, double a_min, double a_max,
                                        int samples, const SolverSpec& spec);

/// Tensor grid over (N, a), row-major with N outer.
std::vector<NeutralPoint> neutral_surface(double n_min, double n_max, int n_samples,
                                          double a_min, double a_max, int a_samples,
                                          const SolverSpec& spec);

struct CriticalPoint {
    double a_crit = 0.0;
    double ra_crit = 0.0;
    double n_rate = 0.0;
    double bracket = 0.0;  ///< final golden-section interval width
};

/// Minimum of Ra(a) over the bracket by golden-section search, after a
/// coarse scan certifies an interior minimum.
CriticalPoint critical_point(double n_rate, const SolverSpec& spec, double a_lo,
                             double a_hi);

struct Table1Row {
    double n_rate;
    std::string a_sq_label;  ///< the printed a^2, kept verbatim
    double a_sq;
    double paper_k2;
    double paper_k3;
    double paper_var;
};

/// The paper's 16 reference rows.
const std::vector<Table1Row>& table1_rows();

std::optional<double> table1_paper_value(double n_rate, double a_sq, const SolverSpec& spec);

struct Table1Cell {
    std::string method;
    int order = 0;
    double computed = 0.0;
    std::optional<double> paper;
    bool ok = true;
    std::string error;
};

struct Table1Report {
    std::vector<Table1Row> rows;
    std::vector<std::vector<Table1Cell>> cells;  ///< cells[row][method]
};

Table1Report table1_report(const std::vector<SolverSpec>& methods);

/// Sweep parallelism cap: HEATCONV_THREADS when set, else hardware threads.
int max_threads();

}  // namespace heatconv

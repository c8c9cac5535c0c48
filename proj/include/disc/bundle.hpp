#ifndef DISC_BUNDLE_HPP
#define DISC_BUNDLE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "disc/graded_module.hpp"
#include "disc/hopf.hpp"
#include "disc/ncpoly.hpp"

namespace disc {

class BundleError : public std::runtime_error {
public:
    explicit BundleError(const std::string& m) : std::runtime_error(m) {}
};

struct VerifyBounds {
    int confluence = 8;
    int hilbert = 10;
    int main_theorem = 8;
    int galois = 6;
    // "smash": trace of A#H over A via the Frobenius system.  "fixed_ring":
    // regular trace of A over the (possibly non-central) subring directly.
    std::string galois_mode = "smash";
};

// A self-contained instance: presentation, central subring, optional Hopf
// action, optional explicit basis, expected values, verification bounds.
// Non-copyable because the action spec points back into the owned data.
struct InstanceBundle {
    std::string id;
    VerifyBounds bounds;
    CentralSubalgebra central;
    std::optional<FreeModuleBasis> explicit_basis;
    std::optional<Character> hdet;
    std::map<std::string, std::string> expected;

    const AlgebraPresentation& pres() const;
    bool has_hopf() const { return act.has_value(); }
    const ActionSpec& action() const;
    const HopfAlgebraSpec& hopf() const;
    bool hopf_is_group() const { return is_group; }

    // Expected-value accessors; nullopt when the key is absent.
    std::optional<std::string> expect(const std::string& key) const;
    std::optional<NCPoly> expect_nc(const std::string& key) const;
    std::optional<CommPoly> expect_comm(const std::string& key) const;

    InstanceBundle() = default;
    InstanceBundle(const InstanceBundle&) = delete;
    InstanceBundle& operator=(const InstanceBundle&) = delete;

    // Owned storage; action points into own_pres/own_hopf or into h2.
    std::unique_ptr<AlgebraPresentation> own_pres;
    std::unique_ptr<HopfAlgebraSpec> own_hopf;
    std::unique_ptr<H2n2Instance> h2;
    std::optional<ActionSpec> act;
    bool is_group = false;
};

std::unique_ptr<InstanceBundle> parse_bundle(const std::string& text,
                                             const std::string& source_name);
std::unique_ptr<InstanceBundle> load_bundle(const std::string& path);

// One verdict line of a report.
struct CheckLine {
    std::string name;
    bool ok;
    std::string detail;
};

struct Report {
    std::string command;
    std::string instance;
    std::vector<CheckLine> checks;
    std::vector<std::pair<std::string, std::string>> values;

    void add(const std::string& name, bool ok, const std::string& detail = "");
    void value(const std::string& key, const std::string& val);
    bool ok() const;
    std::string human() const;
    std::string json() const;  // deterministic: no timings, fixed key order
};

// Builds the graded module for a bundle (explicit basis or discovery) and
// checks the expected rank when one is declared.
GradedModule build_module(const InstanceBundle& b, Report& rep);

Report run_nf(const InstanceBundle& b, const std::string& expr);
Report run_confluence(const InstanceBundle& b, int degree);
Report run_hilbert(const InstanceBundle& b, int degree);
Report run_disc(const InstanceBundle& b);
Report run_norm_different(const InstanceBundle& b);
Report run_jacobian(const InstanceBundle& b);
// suite: "main", "smash", "galois" or "reflection".
Report run_verify(const InstanceBundle& b, const std::string& suite,
                  int degree_override = -1);

}  // namespace disc

#endif

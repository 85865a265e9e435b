#include "posenergy/adjustments.hpp"
#include "posenergy/baselines.hpp"
#include "posenergy/errors.hpp"
#include "posenergy/estimator.hpp"
#include "posenergy/ingestion.hpp"
#include "posenergy/regression.hpp"
#include "posenergy/report.hpp"
#include "posenergy/units.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>

namespace py = pybind11;
using namespace posenergy;

namespace {

EnergyUnit unit_from(const std::string& symbol) {
    auto u = parse_unit(symbol);
    if (!u) {
        throw UnitError("unknown energy unit '" + symbol + "'");
    }
    return *u;
}

OutputFormat format_from(const std::string& name) {
    if (name == "text") {
        return OutputFormat::Text;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "svg") {
        return OutputFormat::Svg;
    }
    throw InvalidArgument("unknown format '" + name + "'");
}

std::vector<PublishedRow> no_published() { return {}; }

} // namespace

PYBIND11_MODULE(_posenergy, m) {
    m.doc() = "Validator-based energy estimates for proof-of-stake networks";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", error);
    py::register_exception<UnitError>(m, "UnitError", error);
    py::register_exception<DomainError>(m, "DomainError", error);
    py::register_exception<InsufficientDataError>(m, "InsufficientDataError", error);
    py::register_exception<DegenerateVarianceError>(m, "DegenerateVarianceError", error);
    py::register_exception<ParseError>(m, "ParseError", error);
    py::register_exception<DuplicateError>(m, "DuplicateError", error);
    py::register_exception<ConflictError>(m, "ConflictError", error);
    py::register_exception<MissingDataError>(m, "MissingDataError", error);
    py::register_exception<NetworkError>(m, "NetworkError", error);
    py::register_exception<SchemaDriftError>(m, "SchemaDriftError", error);

    py::class_<NetworkObservation>(m, "Observation")
        .def(py::init([](const std::string& network, const std::string& date, std::uint64_t validators, double tps,
                         const std::string& provenance) {
                 NetworkObservation obs{NetworkId(network), Date::parse_iso(date), validators, tps, false, provenance};
                 obs.validate();
                 return obs;
             }),
             py::arg("network"), py::arg("date"), py::arg("validators"), py::arg("tps"), py::arg("provenance") = "")
        .def_property_readonly("network", [](const NetworkObservation& o) { return o.network.str(); })
        .def_property_readonly("date", [](const NetworkObservation& o) { return o.date.iso(); })
        .def_readonly("validators", &NetworkObservation::validators)
        .def_readonly("tps", &NetworkObservation::tps)
        .def_readonly("synthetic", &NetworkObservation::synthetic)
        .def_readonly("provenance", &NetworkObservation::provenance)
        .def("__repr__", [](const NetworkObservation& o) {
            return "Observation(" + o.network.str() + ", " + o.date.iso() + ", validators=" +
                   std::to_string(o.validators) + ", tps=" + std::to_string(o.tps) + ")";
        });

    py::class_<ValidatorPowerBounds>(m, "Bounds")
        .def(py::init([](const std::string& network, double lower_w, double upper_w, const std::string& note) {
                 ValidatorPowerBounds b{NetworkId(network), lower_w, upper_w, note};
                 b.validate();
                 return b;
             }),
             py::arg("network"), py::arg("lower_w"), py::arg("upper_w"), py::arg("source") = "")
        .def_property_readonly("network", [](const ValidatorPowerBounds& b) { return b.network.str(); })
        .def_readonly("lower_w", &ValidatorPowerBounds::lower_w)
        .def_readonly("upper_w", &ValidatorPowerBounds::upper_w)
        .def_readonly("source", &ValidatorPowerBounds::source_note)
        .def_property_readonly("mid_w", &ValidatorPowerBounds::mid_w);

    py::class_<NetworkProfile>(m, "Profile")
        .def(py::init([](const ValidatorPowerBounds& bounds, double max_tps) {
                 NetworkProfile p{bounds.network, bounds, max_tps};
                 p.validate();
                 return p;
             }),
             py::arg("bounds"), py::arg("max_tps"))
        .def_property_readonly("network", [](const NetworkProfile& p) { return p.network.str(); })
        .def_readonly("bounds", &NetworkProfile::bounds)
        .def_readonly("max_tps", &NetworkProfile::max_tps);

    py::class_<RegressionFit>(m, "Fit")
        .def_property_readonly("network", [](const RegressionFit& f) { return f.network.str(); })
        .def_readonly("k", &RegressionFit::k)
        .def_readonly("lambda_", &RegressionFit::lambda)
        .def_readonly("r2", &RegressionFit::r2)
        .def_readonly("n_points", &RegressionFit::n_points)
        .def_readonly("origin_included", &RegressionFit::origin_included)
        .def("predict", &predict_validators, py::arg("tps"));

    py::class_<ContemporaryEstimate>(m, "Estimate")
        .def_property_readonly("network", [](const ContemporaryEstimate& e) { return e.network.str(); })
        .def_property_readonly("date", [](const ContemporaryEstimate& e) { return e.date.iso(); })
        .def_readonly("global_kw_lower", &ContemporaryEstimate::global_kw_lower)
        .def_readonly("global_kw_mid", &ContemporaryEstimate::global_kw_mid)
        .def_readonly("global_kw_upper", &ContemporaryEstimate::global_kw_upper)
        .def_readonly("kwh_per_tx_lower", &ContemporaryEstimate::kwh_per_tx_lower)
        .def_readonly("kwh_per_tx_mid", &ContemporaryEstimate::kwh_per_tx_mid)
        .def_readonly("kwh_per_tx_upper", &ContemporaryEstimate::kwh_per_tx_upper)
        .def_readonly("tps", &ContemporaryEstimate::tps)
        .def_readonly("validators", &ContemporaryEstimate::validators);

    py::class_<BandPoint>(m, "BandPoint")
        .def_readonly("tps", &BandPoint::tps)
        .def_readonly("lower", &BandPoint::kwh_per_tx_lower)
        .def_readonly("upper", &BandPoint::kwh_per_tx_upper)
        .def_readonly("physical", &BandPoint::physical);

    py::class_<BaselineRecord>(m, "Baseline")
        .def(py::init([](const std::string& name, int year, double amount, const std::string& unit, double tps) {
                 BaselineRecord r{name, year, EnergyQuantity(amount, unit_from(unit)), tps};
                 r.validate();
                 return r;
             }),
             py::arg("name"), py::arg("year"), py::arg("amount"), py::arg("unit"), py::arg("tps"))
        .def_readonly("name", &BaselineRecord::name)
        .def_readonly("year", &BaselineRecord::period_year)
        .def_readonly("tps", &BaselineRecord::tps)
        .def_property_readonly("kwh_per_second", &per_second_energy_kwh)
        .def_property_readonly("kwh_per_tx", &baseline_per_tx_kwh);

    m.def(
        "convert", [](double value, const std::string& from, const std::string& to) {
            return convert(EnergyQuantity(value, unit_from(from)), unit_from(to)).value();
        },
        py::arg("value"), py::arg("from_unit"), py::arg("to_unit"));
    m.def("global_power_kw", &global_power_kw, py::arg("validators"), py::arg("watts"));
    m.def("energy_per_tx_kwh", &energy_per_tx_kwh, py::arg("validators"), py::arg("watts"), py::arg("tps"));

    m.def(
        "fit_affine",
        [](const std::vector<NetworkObservation>& obs, bool include_origin) { return fit_affine(obs, include_origin); },
        py::arg("observations"), py::arg("include_origin") = true);
    m.def(
        "r_squared",
        [](const RegressionFit& fit, const std::vector<NetworkObservation>& obs) { return r_squared(fit, obs); },
        py::arg("fit"), py::arg("observations"));

    m.def("contemporary_estimate", &contemporary_estimate, py::arg("observation"), py::arg("bounds"));
    m.def(
        "consumption_band",
        [](const RegressionFit& fit, const NetworkProfile& profile, const std::vector<double>& grid) {
            return consumption_band(fit, profile, grid).points;
        },
        py::arg("fit"), py::arg("profile"), py::arg("grid"));
    m.def("default_grid", &default_grid, py::arg("profile"), py::arg("n_points") = default_grid_points,
          py::arg("l_min") = default_l_min);

    m.def(
        "nonvote_ratio",
        [](std::uint64_t nonvote, std::uint64_t total) {
            return nonvote_ratio(VoteRatioRecord{Date(2000, 1, 1), nonvote, total, 0.0});
        },
        py::arg("nonvote_per_day"), py::arg("total_per_day"));
    m.def("adjust_tps", &adjust_tps, py::arg("reported_tps"), py::arg("ratio"));
    m.def(
        "adjusted_max_tps",
        [](double postulated, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& counts) {
            std::vector<VoteRatioRecord> recs;
            for (auto [nonvote, total] : counts) {
                recs.push_back({Date(2000, 1, 1), nonvote, total, 0.0});
            }
            return adjusted_max_tps(postulated, recs);
        },
        py::arg("postulated_max"), py::arg("counts"));

    m.def(
        "load_snapshots", [](const std::filesystem::path& path) { return load_snapshots(path).observations; },
        py::arg("path"));
    m.def(
        "load_vote_counts",
        [](const std::filesystem::path& path) {
            std::vector<py::tuple> out;
            for (const auto& [network, rec] : load_snapshots(path).vote_ratios) {
                out.push_back(py::make_tuple(network.str(), rec.date.iso(), rec.nonvote_tx_per_day,
                                             rec.total_tx_per_day, rec.reported_tps));
            }
            return out;
        },
        py::arg("path"));
    m.def(
        "merge", [](const std::vector<std::vector<NetworkObservation>>& sets) { return merge(sets); },
        py::arg("sets"));
    m.def(
        "load_bounds",
        [](const std::filesystem::path& path) {
            std::map<std::string, ValidatorPowerBounds> out;
            for (auto& [id, b] : load_bounds(path)) {
                out.emplace(id.str(), b);
            }
            return out;
        },
        py::arg("path"));
    m.def(
        "load_profiles",
        [](const std::filesystem::path& path, const std::filesystem::path& bounds_path) {
            std::map<std::string, NetworkProfile> out;
            for (auto& [id, p] : load_profiles(path, load_bounds(bounds_path))) {
                out.emplace(id.str(), p);
            }
            return out;
        },
        py::arg("path"), py::arg("bounds_path"));
    m.def("load_baselines", &load_baselines, py::arg("path"));

    m.def(
        "fit_report",
        [](const std::filesystem::path& observations, std::optional<std::string> network, bool include_origin,
           const std::string& format) {
            auto obs = load_snapshots(observations).observations;
            std::optional<NetworkId> only;
            if (network) {
                only = NetworkId(*network);
            }
            return format_fit_summary(fit_networks(obs, only, include_origin), format_from(format));
        },
        py::arg("observations"), py::arg("network") = py::none(), py::arg("include_origin") = true,
        py::arg("format") = "text");
    m.def(
        "table_report",
        [](const std::filesystem::path& observations, const std::filesystem::path& bounds,
           const std::filesystem::path& baselines, std::optional<std::filesystem::path> published,
           const std::string& format) {
            std::vector<NetworkObservation> sets[] = {load_snapshots(observations).observations};
            auto obs = merge(sets);
            auto table = build_table(obs, load_bounds(bounds), load_baselines(baselines),
                                     published ? load_published(*published) : no_published());
            return format_table(table, format_from(format));
        },
        py::arg("observations"), py::arg("bounds"), py::arg("baselines"), py::arg("published") = py::none(),
        py::arg("format") = "text");
    m.def(
        "chart_report",
        [](const std::filesystem::path& observations, const std::filesystem::path& bounds,
           const std::filesystem::path& profiles, const std::filesystem::path& baselines,
           const std::vector<std::string>& networks, bool include_baselines, bool include_origin, double l_min,
           std::size_t n_points, const std::string& format) {
            ChartSpec spec;
            for (const auto& n : networks) {
                spec.networks.emplace_back(n);
            }
            spec.include_baselines = include_baselines;
            spec.include_origin = include_origin;
            spec.l_min = l_min;
            spec.n_points = n_points;
            std::vector<NetworkObservation> sets[] = {load_snapshots(observations).observations};
            auto obs = merge(sets);
            auto chart = build_chart(spec, obs, load_profiles(profiles, load_bounds(bounds)), load_baselines(baselines));
            return format_from(format) == OutputFormat::Svg ? chart_svg(chart) : chart_csv(chart);
        },
        py::arg("observations"), py::arg("bounds"), py::arg("profiles"), py::arg("baselines"),
        py::arg("networks") = std::vector<std::string>{}, py::arg("include_baselines") = true,
        py::arg("include_origin") = true, py::arg("l_min") = default_l_min, py::arg("n_points") = default_grid_points,
        py::arg("format") = "csv");
}

#include "photonbox/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "photonbox/constants.hpp"
#include "photonbox/errors.hpp"
#include "photonbox/experiments.hpp"
#include "photonbox/spectrum.hpp"
#include "photonbox/thermo.hpp"

namespace photonbox::cli {

namespace {

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    double x_cm = 0;
    double y_cm = 0;
    double z_cm = 0;
    double alpha = 0;
    double beta = 0;
    double edge_cm = 0;
    std::string temperature_k;
    std::string t_reduced;
    int points = 0;
    std::string spacing = "log";
    int cubes = 50;
    std::string arrangement;
    std::string cutoff = "auto";
    double tol = 1e-8;
    std::string output;
    std::string format = "csv";
    std::string constants_path;
    unsigned threads = 0;
};

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render_csv(Table const& table)
{
    std::string text;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
    {
        if (i)
            text += ',';
        text += table.columns[i];
    }
    text += '\n';
    for (auto const& row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                text += ',';
            text += format_number(row[i]);
        }
        text += '\n';
    }
    return text;
}

std::string render_json(Table const& table)
{
    nlohmann::ordered_json doc;
    doc["metadata"] = table.metadata;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (auto const& row : table.rows)
    {
        nlohmann::ordered_json record = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            record[table.columns[i]] = row[i];
        rows.push_back(std::move(record));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + '\n';
}

// --- option resolution -----------------------------------------------------

struct Resolved
{
    PhysicalConstants constants;
    CutoffPolicy policy;
};

bool given(CLI::App const& app, char const* name)
{
    return app.count(name) > 0;
}

struct GeometryInput
{
    CuboidGeometry geom;
    bool absolute;  // edges known in cm
};

GeometryInput resolve_geometry(CLI::App const& app, Options const& o)
{
    bool const xyz = given(app, "--x-cm") || given(app, "--y-cm") || given(app, "--z-cm");
    bool const shape = given(app, "--alpha") || given(app, "--beta");
    if (xyz && (shape || given(app, "--edge-cm")))
        throw UsageError("use either --x-cm/--y-cm/--z-cm or --alpha/--beta/--edge-cm, not both");
    if (xyz)
    {
        if (!given(app, "--x-cm") || !given(app, "--y-cm") || !given(app, "--z-cm"))
            throw UsageError("--x-cm, --y-cm and --z-cm must be given together");
        return {CuboidGeometry(o.x_cm, o.y_cm, o.z_cm), true};
    }
    if (!given(app, "--alpha") || !given(app, "--beta"))
        throw UsageError("a geometry is required: --x-cm/--y-cm/--z-cm or --alpha/--beta [--edge-cm]");
    bool const absolute = given(app, "--edge-cm");
    return {CuboidGeometry::from_shape(o.alpha, o.beta, absolute ? o.edge_cm : 1.0), absolute};
}

struct TemperatureInput
{
    std::vector<double> t;
    std::vector<double> kelvin;  // empty when given in reduced form
};

std::vector<double> grid_from(CLI::App const& app, Options const& o, std::string const& text)
{
    bool const range = text.find(':') != std::string::npos;
    if (range && !given(app, "--points"))
        throw UsageError("a lo:hi range needs --points");
    if (!range && given(app, "--points"))
        throw UsageError("--points applies only to lo:hi ranges");
    return parse_grid(text, o.points, o.spacing);
}

// a_cm: length scale converting kelvin to reduced temperature, if known.
TemperatureInput resolve_temperature(CLI::App const& app, Options const& o,
                                     std::optional<double> a_cm,
                                     PhysicalConstants const& constants)
{
    bool const kelvin = given(app, "--temperature-k");
    bool const reduced = given(app, "--t-reduced");
    if (kelvin == reduced)
        throw UsageError("give exactly one of --temperature-k or --t-reduced");
    TemperatureInput in;
    if (reduced)
    {
        in.t = grid_from(app, o, o.t_reduced);
        if (a_cm)
            for (double t : in.t)
                in.kelvin.push_back(constants.temperature(t, *a_cm));
        return in;
    }
    if (!a_cm)
        throw UsageError("--temperature-k needs absolute edges (--x-cm/--y-cm/--z-cm or --edge-cm)");
    in.kelvin = grid_from(app, o, o.temperature_k);
    for (double T : in.kelvin)
        in.t.push_back(constants.reduced_temperature(T, *a_cm));
    return in;
}

Resolved resolve_common(Options const& o)
{
    Resolved r;
    if (!o.constants_path.empty())
    {
        try
        {
            r.constants = PhysicalConstants::from_json_file(o.constants_path);
        }
        catch (std::exception const& e)
        {
            throw UsageError(e.what());
        }
    }
    if (o.cutoff == "auto")
    {
        if (!(o.tol > 0 && o.tol < 1e-2))
            throw UsageError("--tol must lie in (0, 1e-2)");
        r.policy = AdaptiveCutoff{o.tol};
    }
    else
    {
        double omega = 0;
        try
        {
            std::size_t used = 0;
            omega = std::stod(o.cutoff, &used);
            if (used != o.cutoff.size())
                throw std::invalid_argument("trailing characters");
        }
        catch (std::exception const&)
        {
            throw UsageError("--cutoff must be 'auto' or a number");
        }
        if (!(omega >= 0) || !std::isfinite(omega))
            throw UsageError("--cutoff must be non-negative");
        r.policy = FixedCutoff{omega};
    }
    return r;
}

Arrangement resolve_arrangement(CLI::App const& app, Options const& o)
{
    if (o.cubes < 1)
        throw UsageError("--cubes must be at least 1");
    if (!given(app, "--arrangement"))
        return Arrangement::inline_row(o.cubes);
    Arrangement arr;
    char sep1 = 0;
    char sep2 = 0;
    std::istringstream is(o.arrangement);
    if (!(is >> arr.mx >> sep1 >> arr.my >> sep2 >> arr.mz) || sep1 != 'x' || sep2 != 'x'
        || is.peek() != std::char_traits<char>::eof())
        throw UsageError("--arrangement must look like 50x1x1");
    if (arr.mx < 1 || arr.my < 1 || arr.mz < 1)
        throw UsageError("--arrangement factors must be at least 1");
    if (given(app, "--cubes") && arr.cubes() != o.cubes)
        throw UsageError("--arrangement product differs from --cubes");
    return arr;
}

nlohmann::ordered_json base_metadata(std::string const& subcommand, Resolved const& r)
{
    nlohmann::ordered_json meta;
    meta["tool"] = "photonbox";
    meta["version"] = tool_version;
    meta["subcommand"] = subcommand;
    meta["constants"] = {{"hbar_erg_s", r.constants.hbar},
                         {"c_cm_s", r.constants.c},
                         {"k_B_erg_per_K", r.constants.k_B},
                         {"B_cm_K", r.constants.B()},
                         {"sigma_erg_per_s_cm2_K4", r.constants.sigma()}};
    if (auto const* fixed = std::get_if<FixedCutoff>(&r.policy))
        meta["cutoff"] = {{"policy", "fixed"}, {"omega", fixed->omega}};
    else
        meta["cutoff"] = {{"policy", "auto"},
                          {"tolerance", std::get<AdaptiveCutoff>(r.policy).tolerance}};
    return meta;
}

void add_shape(nlohmann::ordered_json& meta, CuboidGeometry const& g, bool absolute)
{
    meta["alpha"] = g.alpha();
    meta["beta"] = g.beta();
    if (absolute)
        meta["edges_cm"] = {g.x(), g.y(), g.z()};
}

// --- subcommands -------------------------------------------------------------

Table run_report(CLI::App const& app, Options const& o)
{
    Resolved r = resolve_common(o);
    auto g = resolve_geometry(app, o);
    std::optional<double> a;
    if (g.absolute)
        a = g.geom.scale();
    auto temps = resolve_temperature(app, o, a, r.constants);

    Table table;
    table.columns = columns_for("report");
    table.metadata = base_metadata("report", r);
    add_shape(table.metadata, g.geom, g.absolute);
    auto reports = parallel_map<ThermoReport>(temps.t.size(), o.threads, [&](std::size_t i) {
        return evaluate(ThermoState(g.geom, temps.t[i], r.policy));
    });
    for (std::size_t i = 0; i < reports.size(); ++i)
    {
        auto const& p = reports[i];
        table.rows.push_back({temps.t[i], p.F_red, p.E_red, p.S_red, p.N, p.C_red, p.px_red,
                              p.py_red, p.pz_red, p.phi, p.omega_e});
    }
    return table;
}

Table run_energy_curve(CLI::App const& app, Options const& o)
{
    Resolved r = resolve_common(o);
    auto g = resolve_geometry(app, o);
    std::optional<double> a;
    if (g.absolute)
        a = g.geom.scale();
    auto temps = resolve_temperature(app, o, a, r.constants);
    auto rows = energy_curve(g.geom.alpha(), g.geom.beta(), temps.t, r.policy, o.threads);

    Table table;
    table.columns = columns_for("energy-curve");
    table.metadata = base_metadata("energy-curve", r);
    add_shape(table.metadata, g.geom, g.absolute);
    for (auto const& row : rows)
    {
        auto const& p = row.report;
        table.rows.push_back({row.t, p.phi, p.E_red, p.S_red, p.N, p.C_red, p.omega_e});
    }
    return table;
}

Table run_pressure_curve(CLI::App const& app, Options const& o)
{
    Resolved r = resolve_common(o);
    auto g = resolve_geometry(app, o);
    if (!g.absolute)
        throw UsageError("pressure-curve needs absolute edges (--x-cm/--y-cm/--z-cm or --edge-cm)");
    auto temps = resolve_temperature(app, o, g.geom.scale(), r.constants);
    auto rows = pressure_curve(g.geom, temps.kelvin, r.constants, r.policy, o.threads);

    Table table;
    table.columns = columns_for("pressure-curve");
    table.metadata = base_metadata("pressure-curve", r);
    add_shape(table.metadata, g.geom, true);
    for (auto const& row : rows)
        table.rows.push_back(
            {row.T_kelvin, row.t, row.px_over_pav, row.py_over_pav, row.pz_over_pav});
    return table;
}

MergeOptions merge_options(Resolved const& r)
{
    auto const* adaptive = std::get_if<AdaptiveCutoff>(&r.policy);
    if (!adaptive)
        throw UsageError("merge experiments need --cutoff auto");
    MergeOptions opts;
    opts.cutoff = *adaptive;
    return opts;
}

Table run_merge(CLI::App const& app, Options const& o, bool adiabatic)
{
    std::string const name = adiabatic ? "merge-adiabatic" : "merge-isothermal";
    Resolved r = resolve_common(o);
    if (given(app, "--x-cm") || given(app, "--y-cm") || given(app, "--z-cm")
        || given(app, "--alpha") || given(app, "--beta"))
        throw UsageError(name + " works on cubes; give only --edge-cm");
    Arrangement arr = resolve_arrangement(app, o);
    std::optional<double> a;
    double edge = 1.0;
    if (given(app, "--edge-cm"))
    {
        if (!(o.edge_cm > 0))
            throw UsageError("--edge-cm must be positive");
        edge = o.edge_cm;
        a = edge;
    }
    auto temps = resolve_temperature(app, o, a, r.constants);
    MergeOptions opts = merge_options(r);

    Table table;
    table.columns = columns_for(name);
    table.metadata = base_metadata(name, r);
    table.metadata["cubes"] = arr.cubes();
    table.metadata["arrangement"] = {arr.mx, arr.my, arr.mz};
    if (a)
        table.metadata["cube_edge_cm"] = edge;

    auto results = parallel_map<MergeResult>(temps.t.size(), o.threads, [&](std::size_t i) {
        return adiabatic ? adiabatic_merge(arr, temps.t[i], edge, opts)
                         : isothermal_merge(arr, temps.t[i], edge, opts);
    });
    for (auto const& m : results)
    {
        if (adiabatic)
            table.rows.push_back({m.t, m.T_ratio, m.N_ratio, m.T_drop(), m.T_drop_reduced()});
        else
            table.rows.push_back({m.t, m.dE_iso});
    }
    return table;
}

Table run_modes(CLI::App const& app, Options const& o)
{
    if (o.cutoff == "auto")
        throw UsageError("modes needs a numeric --cutoff");
    Resolved r = resolve_common(o);
    auto g = resolve_geometry(app, o);
    double const cutoff = std::get<FixedCutoff>(r.policy).omega;
    if (!(cutoff > 0))
        throw UsageError("modes needs a positive --cutoff");

    Table table;
    table.columns = columns_for("modes");
    table.metadata = base_metadata("modes", r);
    add_shape(table.metadata, g.geom, g.absolute);
    for (auto const& m : enumerate_modes(g.geom, cutoff))
        table.rows.push_back({double(m.n.nx), double(m.n.ny), double(m.n.nz),
                              double(m.degeneracy), m.omega});
    return table;
}

void add_geometry_options(CLI::App* sub, Options& o)
{
    sub->add_option("--x-cm", o.x_cm, "Edge X in cm")->check(CLI::PositiveNumber);
    sub->add_option("--y-cm", o.y_cm, "Edge Y in cm")->check(CLI::PositiveNumber);
    sub->add_option("--z-cm", o.z_cm, "Edge Z in cm")->check(CLI::PositiveNumber);
    sub->add_option("--alpha", o.alpha, "Shape ratio X/Z")->check(CLI::PositiveNumber);
    sub->add_option("--beta", o.beta, "Shape ratio Y/Z")->check(CLI::PositiveNumber);
    sub->add_option("--edge-cm", o.edge_cm, "Volume scale a = V^(1/3) in cm (cube edge for merges)")
        ->check(CLI::PositiveNumber);
}

void add_temperature_options(CLI::App* sub, Options& o)
{
    sub->add_option("--temperature-k", o.temperature_k,
                    "Temperatures in K: v1,v2,... or lo:hi with --points");
    sub->add_option("--t-reduced", o.t_reduced,
                    "Reduced temperatures t = T a / B: v1,v2,... or lo:hi with --points");
    sub->add_option("--points", o.points, "Number of points in a lo:hi range")
        ->check(CLI::PositiveNumber);
    sub->add_option("--spacing", o.spacing, "Range spacing")
        ->check(CLI::IsMember({"log", "linear"}));
}

void add_common_options(CLI::App* sub, Options& o)
{
    sub->add_option("--cutoff", o.cutoff, "auto, or a fixed normalized cutoff frequency");
    sub->add_option("--tol", o.tol, "Relative tolerance of the adaptive cutoff");
    sub->add_option("--output", o.output, "Output file (default: stdout)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--constants", o.constants_path, "JSON file overriding physical constants")
        ->check(CLI::ExistingFile);
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

void print_error_line(std::ostream& err, std::string const& kind, std::string const& message)
{
    nlohmann::json line = {{"error", kind}, {"message", message}};
    err << line.dump() << '\n';
}

}  // namespace

std::vector<double> parse_grid(std::string const& text, int points, std::string const& spacing)
{
    auto to_double = [](std::string const& s) {
        std::size_t used = 0;
        double v = 0;
        try
        {
            v = std::stod(s, &used);
        }
        catch (std::exception const&)
        {
            throw UsageError("not a number: '" + s + "'");
        }
        if (used != s.size())
            throw UsageError("not a number: '" + s + "'");
        if (!(v > 0) || !std::isfinite(v))
            throw UsageError("grid values must be positive: '" + s + "'");
        return v;
    };

    std::vector<double> grid;
    auto colon = text.find(':');
    if (colon != std::string::npos)
    {
        double lo = to_double(text.substr(0, colon));
        double hi = to_double(text.substr(colon + 1));
        if (points < 1)
            throw UsageError("a range needs at least one point");
        if (points == 1)
        {
            if (lo != hi)
                throw UsageError("a one-point range needs lo == hi");
            return {lo};
        }
        if (!(hi > lo))
            throw UsageError("a range needs lo < hi");
        bool const log = spacing == "log";
        if (!log && spacing != "linear")
            throw UsageError("spacing must be log or linear");
        for (int i = 0; i < points; ++i)
        {
            double f = double(i) / double(points - 1);
            double v = log ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)))
                           : lo + f * (hi - lo);
            grid.push_back(v);
        }
        grid.front() = lo;
        grid.back() = hi;
    }
    else
    {
        std::size_t start = 0;
        while (true)
        {
            auto comma = text.find(',', start);
            grid.push_back(to_double(text.substr(start, comma - start)));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw UsageError("grid values must increase strictly");
    return grid;
}

std::vector<std::string> columns_for(std::string const& subcommand)
{
    static std::map<std::string, std::vector<std::string>> const columns = {
        {"report",
         {"t", "F_red", "E_red", "S_red", "N", "C_red", "px_red", "py_red", "pz_red", "phi",
          "omega_e"}},
        {"energy-curve", {"t", "phi", "E_red", "S_red", "N", "C_red", "omega_e"}},
        {"pressure-curve", {"T_K", "t", "px_over_pav", "py_over_pav", "pz_over_pav"}},
        {"merge-adiabatic", {"t", "T_ratio", "N_ratio", "T_drop", "dT_red"}},
        {"merge-isothermal", {"t", "dE_iso"}},
        {"modes", {"n_x", "n_y", "n_z", "g", "omega"}},
    };
    auto it = columns.find(subcommand);
    if (it == columns.end())
        throw std::invalid_argument("unknown subcommand: " + subcommand);
    return it->second;
}

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Thermodynamics of a photon gas in a finite cuboid cavity", "photonbox"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);
    Options o;

    struct Entry
    {
        CLI::App* app;
        std::function<Table(CLI::App const&)> run;
    };
    std::vector<Entry> entries;

    auto* report = app.add_subcommand("report", "Thermodynamic functions at given temperatures");
    entries.push_back({report, [&](CLI::App const& a) { return run_report(a, o); }});
    auto* energy = app.add_subcommand("energy-curve", "phi and friends over a temperature grid");
    entries.push_back({energy, [&](CLI::App const& a) { return run_energy_curve(a, o); }});
    auto* pressure = app.add_subcommand("pressure-curve", "Face pressure ratios over a K grid");
    entries.push_back({pressure, [&](CLI::App const& a) { return run_pressure_curve(a, o); }});
    auto* adiabatic = app.add_subcommand("merge-adiabatic", "Adiabatic removal of partitions");
    entries.push_back({adiabatic, [&](CLI::App const& a) { return run_merge(a, o, true); }});
    auto* isothermal = app.add_subcommand("merge-isothermal", "Isothermal removal of partitions");
    entries.push_back({isothermal, [&](CLI::App const& a) { return run_merge(a, o, false); }});
    auto* modes = app.add_subcommand("modes", "List cavity modes up to a cutoff");
    entries.push_back({modes, [&](CLI::App const& a) { return run_modes(a, o); }});

    for (auto& e : entries)
    {
        add_geometry_options(e.app, o);
        add_common_options(e.app, o);
        if (e.app != modes)
            add_temperature_options(e.app, o);
        if (e.app == adiabatic || e.app == isothermal)
        {
            e.app->add_option("--cubes", o.cubes, "Number of cubes M");
            e.app->add_option("--arrangement", o.arrangement, "Cube block, e.g. 50x1x1");
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return 0;
    }
    catch (CLI::CallForVersion const&)
    {
        out << tool_version << '\n';
        return 0;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try
    {
        for (auto const& e : entries)
        {
            if (!e.app->parsed())
                continue;
            if (e.app->count("--threads"))
                set_evaluation_threads(o.threads);
            Table table = e.run(*e.app);
            std::string text = o.format == "json" ? render_json(table) : render_csv(table);
            if (o.output.empty())
            {
                out << text;
            }
            else
            {
                std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
                if (!file)
                    throw UsageError("cannot write " + o.output);
                file << text;
                if (!file.flush())
                    throw UsageError("cannot write " + o.output);
            }
            return 0;
        }
    }
    catch (UsageError const& e)
    {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    catch (CutoffTooLarge const& e)
    {
        print_error_line(err, "cutoff_too_large", e.what());
        return 1;
    }
    catch (SolverFailure const& e)
    {
        print_error_line(err, "solver_failure", e.what());
        return 1;
    }
    catch (std::invalid_argument const& e)
    {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    catch (std::exception const& e)
    {
        print_error_line(err, "numerical_failure", e.what());
        return 1;
    }
    return 2;
}

}  // namespace photonbox::cli

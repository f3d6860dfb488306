#include "sbi/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbi/errors.hpp"
#include "sbi/saturation.hpp"
#include "sbi/text.hpp"

namespace sbi {

namespace {

using nlohmann::json;

struct Options {
    std::string file;
    std::string sigma = "id";
    bool json = false;
    std::string kind;
    std::string query;
};

struct Io {
    Options const & o;
    std::istream & in;
    std::ostream & out;

    Sigma sigma() const { return o.sigma == "conj" ? Sigma::Conjugation : Sigma::Identity; }

    std::string input() const
    {
        std::stringstream ss;
        if (o.file.empty() || o.file == "-") {
            ss << in.rdbuf();
        } else {
            std::ifstream f(o.file);
            if (!f) throw ParseError("cannot open " + o.file, 0, 0);
            ss << f.rdbuf();
        }
        return ss.str();
    }
};

json vec_json(LatVec const & v)
{
    json a = json::array();
    for (auto const & e : v.entries()) a.push_back(to_string(e));
    return a;
}

json chain_json(std::vector<LaurentBinomial> const & c)
{
    json a = json::array();
    for (auto const & b : c) a.push_back(to_string(b));
    return a;
}

json vars_json(VarSet const & v)
{
    json a = json::array();
    for (std::size_t i : v) a.push_back("y" + std::to_string(i + 1));
    return a;
}

int print_basis(Io const & io, GhnfBasis const & b, std::vector<mpz_class> const * mult = nullptr)
{
    if (!io.o.json) {
        io.out << format_ghnf(b, mult);
        return 0;
    }
    json j{{"dim", b.dim()}, {"rank", b.rank()}, {"columns", json::array()}, {"blocks", json::array()}};
    for (auto const & c : b.columns()) j["columns"].push_back(vec_json(c));
    for (auto const & blk : b.blocks()) {
        json d = json::array(), l = json::array();
        for (std::size_t i = blk.first; i < blk.first + blk.size; ++i) {
            d.push_back(b.leading(i).deg);
            l.push_back(b.leading(i).coeff.get_str());
        }
        j["blocks"].push_back({{"row", blk.row + 1}, {"degrees", d}, {"leading", l}});
    }
    if (mult) {
        j["multipliers"] = json::array();
        for (auto const & m : *mult) j["multipliers"].push_back(m.get_str());
    }
    io.out << j.dump(2) << "\n";
    return 0;
}

int print_bool(Io const & io, bool v)
{
    if (io.o.json)
        io.out << json{{"result", v}}.dump() << "\n";
    else
        io.out << (v ? "true" : "false") << "\n";
    return 0;
}

int print_ideal(Io const & io, IdealResult const & r, std::size_t n)
{
    if (io.o.json) {
        json j{{"unit", !r}, {"vars", n}};
        if (r) j["chain"] = chain_json(r->chain());
        io.out << j.dump(2) << "\n";
    } else {
        io.out << format_character(r, n);
    }
    return r ? 0 : 1;
}

int print_unit(Io const & io)
{
    return print_ideal(io, std::nullopt, 0);
}

GhnfBasis read_basis(Io const & io)
{
    MatrixDoc d = parse_matrix(io.input());
    return ghnf(d.cols, d.dim);
}

int dispatch(std::string const & cmd, Io const & io)
{
    Sigma s = io.sigma();
    if (cmd == "ghnf") return print_basis(io, read_basis(io));
    if (cmd == "kernel") {
        MatrixDoc d = parse_matrix(io.input());
        auto k = gker(d.cols, d.dim);
        if (io.o.json) {
            json j{{"dim", d.cols.size()}, {"columns", json::array()}};
            for (auto const & v : k) j["columns"].push_back(vec_json(v));
            io.out << j.dump(2) << "\n";
        } else {
            io.out << format_matrix(d.cols.size(), k);
        }
        return 0;
    }
    if (cmd == "satx") return print_basis(io, sat_x(read_basis(io)));
    if (cmd == "satz") {
        TrackedBasis t = sat_z(read_basis(io));
        return print_basis(io, t.basis, &t.multipliers);
    }
    if (cmd == "satm") return print_basis(io, sat_m(read_basis(io), s));
    if (cmd == "satp") return print_basis(io, sat_p(read_basis(io), s));
    if (cmd == "sat") return print_basis(io, sat_full(read_basis(io)));
    if (cmd == "is-saturated") {
        SatKind k = io.o.kind == "x" ? SatKind::X : io.o.kind == "z" ? SatKind::Z : io.o.kind == "m" ? SatKind::M : SatKind::P;
        return print_bool(io, is_saturated(read_basis(io), k, s));
    }
    if (cmd == "dec-binomial") {
        PlainDoc d = parse_plain_doc(io.input());
        auto cs = dec_binomial(d.gens, d.vars, s);
        if (!io.o.json) {
            io.out << format_components(cs, d.vars);
            return 0;
        }
        json j{{"vars", d.vars}, {"components", json::array()}};
        for (auto const & c : cs) {
            json ch = json::array();
            for (auto const & b : c.chain) ch.push_back(to_string(b));
            j["components"].push_back({{"zero", vars_json(c.zero_vars)}, {"nonzero", vars_json(c.nonzero_vars)}, {"chain", ch}});
        }
        io.out << j.dump(2) << "\n";
        return 0;
    }

    LaurentDoc d = parse_laurent_doc(io.input());
    std::size_t n = d.vars;
    if (cmd == "proper") return print_bool(io, !d.unit && proper(d.gens, n, s));
    if (cmd == "dec-laurent") {
        auto cs = d.unit ? std::vector<PartialCharacter>{} : dec_laurent(d.gens, n, s);
        if (!io.o.json) {
            io.out << format_laurent_components(cs, n);
            return 0;
        }
        json j{{"vars", n}, {"components", json::array()}};
        for (auto const & c : cs) j["components"].push_back(chain_json(c.chain()));
        io.out << j.dump(2) << "\n";
        return 0;
    }
    if (d.unit) {
        if (cmd == "member") return print_bool(io, true);
        return print_unit(io);
    }
    if (cmd == "charset") return print_ideal(io, charset(d.gens, n, s), n);
    if (cmd == "reflexive-closure") return print_ideal(io, reflexive_closure(d.gens, n, s), n);
    if (cmd == "wellmixed-closure") return print_ideal(io, wellmixed_closure(d.gens, n, s), n);
    if (cmd == "perfect-closure") return print_ideal(io, perfect_closure(d.gens, n, s), n);

    IdealResult rho = charset(d.gens, n, s);
    if (cmd == "member") {
        LaurentBinomial q = parse_laurent(io.o.query, n);
        return print_bool(io, !rho || member(q, *rho));
    }
    if (!rho) return print_unit(io);
    if (cmd == "is-prime") return print_bool(io, is_prime(*rho));
    if (cmd == "is-reflexive") return print_bool(io, is_reflexive(*rho));
    if (cmd == "is-wellmixed") return print_bool(io, is_wellmixed(*rho));
    if (cmd == "is-perfect") return print_bool(io, is_perfect(*rho));
    if (cmd == "dimension") {
        std::size_t dim = dimension(*rho);
        if (io.o.json)
            io.out << json{{"dimension", dim}}.dump() << "\n";
        else
            io.out << dim << "\n";
        return 0;
    }
    throw ParseError("unknown command " + cmd, 0, 0);
}

}

int run_cli(std::vector<std::string> const & args, std::istream & in, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Binomial difference ideals and Z[x]-lattices", "sbi"};
    app.require_subcommand(1);
    Options o;
    struct Cmd {
        char const * name;
        char const * help;
    };
    std::vector<Cmd> const cmds = {
        {"ghnf", "reduced GHNF of a matrix (list of columns)"},
        {"kernel", "generators of the kernel of a matrix"},
        {"satx", "x-saturation"},
        {"satz", "Z-saturation with multipliers"},
        {"satm", "M-saturation"},
        {"satp", "P-saturation"},
        {"sat", "full saturation"},
        {"is-saturated", "saturation test, --kind x|z|m|p"},
        {"charset", "characteristic set of Laurent binomials"},
        {"proper", "whether the binomials define a partial character"},
        {"member", "membership of --query in the ideal"},
        {"reflexive-closure", "reflexive closure"},
        {"wellmixed-closure", "well-mixed closure"},
        {"perfect-closure", "perfect closure"},
        {"is-prime", "primality"},
        {"is-reflexive", "reflexivity"},
        {"is-wellmixed", "well-mixedness"},
        {"is-perfect", "perfectness"},
        {"dec-laurent", "reflexive prime decomposition of the perfect closure"},
        {"dec-binomial", "decomposition of plain binomials into components"},
        {"dimension", "dimension of a reflexive prime ideal"},
    };
    for (auto const & c : cmds) {
        CLI::App * sub = app.add_subcommand(c.name, c.help);
        sub->add_option("file", o.file, "input file, stdin when omitted");
        sub->add_option("--sigma", o.sigma, "action of sigma on constants")->check(CLI::IsMember({"id", "conj"}));
        sub->add_flag("--json", o.json, "JSON output");
        if (std::string(c.name) == "is-saturated")
            sub->add_option("--kind", o.kind, "x, z, m or p")->required()->check(CLI::IsMember({"x", "z", "m", "p"}));
        if (std::string(c.name) == "member")
            sub->add_option("--query", o.query, "Laurent binomial to test")->required();
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    Io io{o, in, out};
    try {
        return dispatch(cmd, io);
    } catch (ParseError const & e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (NotReflexivePrime const & e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (Error const & e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}

#include "locker/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "locker/engine.hpp"
#include "locker/verifier.hpp"

namespace locker::cli {

LockerState parse_state(const std::string& text, int n) {
    if (static_cast<int>(text.size()) != n)
        throw std::invalid_argument("state has length " + std::to_string(text.size()) +
                                    ", expected " + std::to_string(n));
    std::vector<int> open;
    for (int j = 1; j <= n; ++j) {
        char c = text[static_cast<std::size_t>(j - 1)];
        if (c == '1')
            open.push_back(j);
        else if (c != '0')
            throw std::invalid_argument("invalid character '" + std::string(1, c) +
                                        "' at position " + std::to_string(j));
    }
    return LockerState::from_open(n, open);
}

MoveSequence parse_moves(const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream in(normalized);
    std::vector<int> moves;
    std::string token;
    auto parse_positive = [](const std::string& t) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(t, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid move token '" + t + "'");
        }
        if (pos != t.size()) throw std::invalid_argument("invalid move token '" + t + "'");
        if (v < 1)
            throw std::invalid_argument("invalid move '" + t +
                                        "': students are numbered from 1");
        return static_cast<int>(v);
    };
    while (in >> token) {
        auto dots = token.find("..");
        if (dots != std::string::npos) {
            int lo = parse_positive(token.substr(0, dots));
            int hi = parse_positive(token.substr(dots + 2));
            if (hi < lo) throw std::invalid_argument("empty range '" + token + "'");
            for (int i = lo; i <= hi; ++i) moves.push_back(i);
        } else {
            moves.push_back(parse_positive(token));
        }
    }
    return MoveSequence(moves);
}

std::string render_set(const IndexSet& u) {
    std::string s;
    for (int i : u.members()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(i);
    }
    return s;
}

namespace {

std::string render_state(const LockerState& v, bool as_indices) {
    if (!as_indices) return v.to_string();
    std::string s;
    for (int j : v.open_indices()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(j);
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read moves file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locker-problem calculator: toggle simulation, forward/inverse maps "
                 "over GF(2), closed-form solvers and a theorem verifier. "
                 "State strings read left to right, locker 1 first."};
    app.require_subcommand(1);

    int n = 0;
    std::string moves_text, moves_file, initial_text, state_text, target_text, students_text;
    bool as_indices = false, trace = false;
    int k = 0, single_i = 0, prefix_p = 0;

    auto* sim = app.add_subcommand("simulate", "Run the game move by move");
    sim->add_option("-n", n, "number of lockers")->required();
    sim->add_option("--moves", moves_text, "ordered move list");
    sim->add_option("--moves-file", moves_file, "file holding the move list");
    sim->add_option("--initial", initial_text, "initial state bits (default all closed)");
    sim->add_flag("--as-indices", as_indices, "print sorted open lockers instead of bits");

    auto* fwd = app.add_subcommand("forward", "Map a student set to its locker state by basis peeling");
    fwd->add_option("-n", n, "number of lockers")->required();
    fwd->add_option("--students", students_text, "student set")->required();
    fwd->add_flag("--trace", trace, "print each peeled minimum on its own line");
    fwd->add_flag("--as-indices", as_indices, "print sorted open lockers instead of bits");

    auto* inv = app.add_subcommand("invert", "Find the student set producing a state");
    inv->add_option("-n", n, "number of lockers")->required();
    inv->add_option("--state", state_text, "target state bits")->required();

    auto* solve = app.add_subcommand("solve", "Student set turning one state into another");
    solve->add_option("-n", n, "number of lockers")->required();
    solve->add_option("--initial", initial_text, "starting state bits")->required();
    solve->add_option("--target", target_text, "desired state bits")->required();

    auto* basis = app.add_subcommand("basis", "The student set opening locker k alone");
    basis->add_option("-n", n, "number of lockers")->required();
    basis->add_option("-k", k, "locker to open")->required();

    auto* cf = app.add_subcommand("closed-form", "Closed-form special cases");
    cf->add_option("-n", n, "number of lockers")->required();
    auto* cf_all = cf->add_subcommand("all", "all students march (squares stay open)");
    auto* cf_single = cf->add_subcommand("single", "one student marches");
    cf_single->add_option("i", single_i, "the student")->required();
    auto* cf_allbut = cf->add_subcommand("all-but", "everyone but one student");
    cf_allbut->add_option("i", single_i, "the absent student")->required();
    auto* cf_prefix = cf->add_subcommand("prefix", "open count for students 1..p, p > n/2");
    cf_prefix->add_option("p", prefix_p, "prefix length")->required();
    cf->require_subcommand(1);

    auto* reduce = app.add_subcommand("reduce", "Parity-reduce a move sequence to a student set");
    reduce->add_option("-n", n, "number of lockers")->required();
    reduce->add_option("--moves", moves_text, "ordered move list");
    reduce->add_option("--moves-file", moves_file, "file holding the move list");

    int verify_n = 100, trials = 200, theorem8_m = 3;
    std::uint64_t seed = 42;
    auto* verify = app.add_subcommand("verify", "Run the theorem checks and report per claim");
    verify->add_option("--n", verify_n, "universe size for the checks");
    verify->add_option("--trials", trials, "random trials per randomized check");
    verify->add_option("--seed", seed, "seed for the deterministic generator");
    verify->add_option("--theorem8", theorem8_m, "largest modulus m to check");

    std::vector<std::string> argv_like = args;
    argv_like.insert(argv_like.begin(), "locker");
    std::vector<const char*> argv;
    for (const auto& a : argv_like) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (!moves_file.empty()) moves_text = read_file(moves_file);

        if (sim->parsed()) {
            LockerState initial =
                initial_text.empty() ? LockerState(n) : parse_state(initial_text, n);
            ProblemSpec spec(n, initial, parse_moves(moves_text));
            out << render_state(simulate(spec), as_indices) << "\n";
        } else if (fwd->parsed()) {
            std::vector<int> members;
            for (int i : parse_moves(students_text).moves)
                if (i <= n && !std::count(members.begin(), members.end(), i))
                    members.push_back(i);
            IndexSet u = IndexSet::of(n, members);
            auto result = forward_basis(u);
            if (trace)
                for (int peeled : result.opened) out << peeled << "\n";
            out << render_state(result.state, as_indices) << "\n";
        } else if (inv->parsed()) {
            out << render_set(inverse_map(parse_state(state_text, n))) << "\n";
        } else if (solve->parsed()) {
            out << render_set(solve_from_initial(parse_state(initial_text, n),
                                                 parse_state(target_text, n)))
                << "\n";
        } else if (basis->parsed()) {
            out << render_set(basis_set(k, n)) << "\n";
        } else if (cf->parsed()) {
            if (cf_all->parsed())
                out << closed_all(n).to_string() << "\n";
            else if (cf_single->parsed())
                out << closed_single(single_i, n).to_string() << "\n";
            else if (cf_allbut->parsed())
                out << closed_all_but_one(single_i, n).to_string() << "\n";
            else
                out << count_open_prefix(prefix_p, n) << "\n";
        } else if (reduce->parsed()) {
            out << render_set(reduce_moves(parse_moves(moves_text), n)) << "\n";
        } else if (verify->parsed()) {
            std::vector<CheckReport> reports;
            reports.push_back(check_forward_equivalence(verify_n, trials, seed));
            reports.push_back(check_group_and_homomorphism(verify_n, trials, seed));
            reports.push_back(check_closed_forms(std::min(verify_n, 100)));
            reports.push_back(check_theorem8(theorem8_m, verify_n));
            bool all_ok = true;
            for (const auto& r : reports) {
                out << r.render() << "\n";
                all_ok = all_ok && r.ok();
            }
            return all_ok ? 0 : 2;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace locker::cli

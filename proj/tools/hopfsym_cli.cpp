// hopfsym: command-line front end for the symmetric-function library.
//
// Exit codes: 0 success, 1 computation error, 2 usage or syntax error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfsym.hpp"

namespace {

using namespace hopfsym;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SchurExpr expr_arg(const std::string& text) {
    try {
        return parse_expr(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("cannot parse expression '" + text + "': " + e.what());
    }
}

Partition partition_arg(const std::string& text) {
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("cannot parse partition '" + text + "': " + e.what());
    }
}

SchurSeries named_series(const std::string& name, const std::optional<Partition>& pi, int cutoff) {
    if (name == "M") return series_M(cutoff);
    if (name == "L") return series_L(cutoff);
    if (name == "A") return series_A(cutoff);
    if (name == "B") return series_B(cutoff);
    if (name == "C") return series_C(cutoff);
    if (name == "D") return series_D(cutoff);
    if (name == "Mpi" || name == "MpiInv") {
        if (!pi) throw UsageError("series " + name + " needs --pi");
        return name == "Mpi" ? series_Mpi(*pi, cutoff) : series_Mpi_inverse(*pi, cutoff);
    }
    throw UsageError("unknown series '" + name + "'");
}

std::string join_dims(const std::vector<Integer>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i == 0) {
            out += std::to_string(values[i]);
        } else {
            out += values[i] < 0 ? " - " + std::to_string(-values[i]) : " + " + std::to_string(values[i]);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric functions in the Schur basis, branchings and twisted products"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_dir;
    int cutoff = kDefaultCutoff;
    app.add_option("--cache", cache_dir, "Directory for persisted LR/plethysm/character tables");
    app.add_option("--cutoff", cutoff, "Series cutoff degree")->check(CLI::NonNegativeNumber);

    // Separate string positionals: CLI11 would split a bracketed argument
    // such as `[2,1]` into list items if these were a vector option.
    std::string expr_a;
    std::string expr_b;
    const auto one_expr = [&](CLI::App* cmd) { cmd->add_option("expr", expr_a, "Expression")->required(); };
    const auto two_exprs = [&](CLI::App* cmd) {
        cmd->add_option("lhs", expr_a, "Left expression")->required();
        cmd->add_option("rhs", expr_b, "Right expression")->required();
    };
    std::string pi_text;

    auto* outer = app.add_subcommand("outer", "Outer (LR) product of two expressions");
    two_exprs(outer);

    auto* skew_cmd = app.add_subcommand("skew", "Skew f / g");
    two_exprs(skew_cmd);

    bool inner_coprod = false;
    auto* coprod = app.add_subcommand("coprod", "Outer coproduct (or inner coproduct with --inner)");
    one_expr(coprod);
    coprod->add_flag("--inner", inner_coprod, "Use the inner (Kronecker-dual) coproduct");

    auto* inner = app.add_subcommand("inner", "Inner (Kronecker) product of two expressions");
    two_exprs(inner);

    std::string pleth_inner;
    std::string pleth_outer;
    auto* pleth = app.add_subcommand("plethysm", "outer[inner]");
    pleth->add_option("--inner", pleth_inner, "Inner partition")->required();
    pleth->add_option("--outer", pleth_outer, "Outer partition or expression")->required();

    std::string series_name;
    auto* series_cmd = app.add_subcommand("series", "Print a Schur function series degree by degree");
    series_cmd->add_option("--name", series_name)
        ->required()
        ->check(CLI::IsMember({"M", "L", "A", "B", "C", "D", "Mpi", "MpiInv"}));
    series_cmd->add_option("--pi", pi_text, "Partition for Mpi/MpiInv");

    auto* branch_cmd = app.add_subcommand("branch", "Restrict GL(n) characters to H_pi");
    branch_cmd->add_option("--pi", pi_text)->required();
    one_expr(branch_cmd);

    auto* lift_cmd = app.add_subcommand("lift", "Lift H_pi characters to GL(n)");
    lift_cmd->add_option("--pi", pi_text)->required();
    one_expr(lift_cmd);

    std::string route = "lift";
    auto* prod = app.add_subcommand("prod", "Twisted product of H_pi characters");
    prod->add_option("--pi", pi_text)->required();
    prod->add_option("--route", route)->check(CLI::IsMember({"kernel", "lift", "cocycle"}));
    two_exprs(prod);

    int dim_n = 0;
    auto* dim = app.add_subcommand("dim", "GL(n) dimension, or formal H_pi dimension with --pi");
    dim->add_option("--n", dim_n)->required()->check(CLI::NonNegativeNumber);
    dim->add_option("--pi", pi_text);
    one_expr(dim);

    auto* h13 = app.add_subcommand("h13", "The H_{1^3}(4) example");
    h13->require_subcommand(1);
    auto* h13_dims = h13->add_subcommand("dims", "Formal dimensions of the length-4 labels");
    auto* h13_modify = h13->add_subcommand("modify", "Determinant modification rules");
    auto* h13_table = h13->add_subcommand("table", "Products against (2)");
    std::string matrix_file;
    auto* h13_stab = h13->add_subcommand("stabcheck", "Check the stabilizer equation for a 4x4 matrix");
    h13_stab->add_option("--matrix", matrix_file)->required();

    std::string lr_lambda;
    std::string lr_mu;
    std::string lr_nu;
    auto* lrcoef = app.add_subcommand("lrcoef", "Littlewood-Richardson coefficient");
    lrcoef->add_option("--lambda", lr_lambda)->required();
    lrcoef->add_option("--mu", lr_mu)->required();
    lrcoef->add_option("--nu", lr_nu)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!cache_dir.empty()) load_tables(cache_dir);
        std::ostream& out = std::cout;

        if (*outer) {
            out << format_expr(outer_product(expr_arg(expr_a), expr_arg(expr_b))) << '\n';
        } else if (*skew_cmd) {
            out << format_expr(skew(expr_arg(expr_a), expr_arg(expr_b))) << '\n';
        } else if (*coprod) {
            const SchurExpr f = expr_arg(expr_a);
            out << format_tensor(inner_coprod ? inner_coproduct(f) : outer_coproduct(f)) << '\n';
        } else if (*inner) {
            out << format_expr(inner_product(expr_arg(expr_a), expr_arg(expr_b))) << '\n';
        } else if (*pleth) {
            const SchurExpr outer_expr = expr_arg(pleth_outer);
            out << format_expr(plethysm(s(partition_arg(pleth_inner)), outer_expr)) << '\n';
        } else if (*series_cmd) {
            std::optional<Partition> pi;
            if (!pi_text.empty()) pi = partition_arg(pi_text);
            const SchurSeries phi = named_series(series_name, pi, cutoff);
            for (int d = 0; d <= phi.cutoff(); ++d) out << d << ": " << format_expr(phi.piece(d)) << '\n';
        } else if (*branch_cmd) {
            const Partition pi = partition_arg(pi_text);
            const SchurExpr f = expr_arg(expr_a);
            if (max_degree(f) > cutoff) throw std::domain_error("expression degree exceeds --cutoff");
            out << format_subgroup(branch(f, pi)) << '\n';
        } else if (*lift_cmd) {
            const SubgroupChar a{partition_arg(pi_text), expr_arg(expr_a)};
            if (max_degree(a.terms) > cutoff) throw std::domain_error("expression degree exceeds --cutoff");
            out << format_expr(lift(a)) << '\n';
        } else if (*prod) {
            const Partition pi = partition_arg(pi_text);
            const SubgroupChar a{pi, expr_arg(expr_a)};
            const SubgroupChar b{pi, expr_arg(expr_b)};
            const ProductRoute r = route == "kernel" ? ProductRoute::kernel
                                   : route == "cocycle" ? ProductRoute::cocycle
                                                        : ProductRoute::lift;
            const int needed = std::max(max_degree(a.terms), 0) + std::max(max_degree(b.terms), 0);
            if (needed > cutoff)
                throw std::domain_error("product degree " + std::to_string(needed) + " exceeds --cutoff " +
                                        std::to_string(cutoff));
            out << format_subgroup(twisted_product(a, b, r, cutoff)) << '\n';
        } else if (*dim) {
            const SchurExpr f = expr_arg(expr_a);
            Integer total = 0;
            if (pi_text.empty()) {
                for (const auto& [lambda, c] : f) total = checked_add(total, checked_mul(c, dim_gl(lambda, dim_n)));
            } else {
                total = formal_dimension({partition_arg(pi_text), f}, dim_n);
            }
            out << total << '\n';
        } else if (*h13) {
            if (*h13_dims) {
                for (const auto& rel : modification_relations_h13())
                    out << "(" << rel.label.str() << ")_" << rel.dimension << "  {" << rel.label.str() << "}_"
                        << rel.gl_dimension << '\n';
            } else if (*h13_modify) {
                for (const auto& rel : modification_relations_h13()) {
                    std::vector<Integer> rhs_dims;
                    for (const auto& [term, c] : epsilon_display_order(rel.reduced)) rhs_dims.push_back(c * rel.term_dimensions.at(term.second));
                    out << "(" << rel.label.str() << ") = {" << rel.label.str() << "}";
                    for (const auto& [mu, c] : rel.branch_rest)
                        out << (c > 0 ? " - " : " + ") << (c > 1 || c < -1 ? std::to_string(c > 0 ? c : -c) + "*" : "")
                            << "(" << mu.str() << ")";
                    out << " = " << format_epsilon(rel.reduced) << "    dims: " << rel.dimension << " = "
                        << join_dims(rhs_dims) << '\n';
                }
            } else if (*h13_table) {
                for (const auto& row : product_table_h13()) {
                    std::vector<Integer> dims;
                    for (const auto& [mu, d] : row.term_dimensions) dims.push_back(row.product.terms.coeff(mu) * d);
                    out << "(" << row.left.str() << ") . (" << row.right.str() << ") = " << format_subgroup(row.product)
                        << "    dims: " << join_dims(dims) << " = " << row.dimension_sum << " = "
                        << row.left_dimension << "*" << row.right_dimension
                        << (row.dimensions_consistent() ? "" : "  INCONSISTENT") << '\n';
                }
            } else if (*h13_stab) {
                std::ifstream in(matrix_file);
                if (!in) throw UsageError("cannot open matrix file " + matrix_file);
                RationalMatrix4 a;
                try {
                    a = parse_matrix4(in);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                out << (stabilizer_check(a) ? "true" : "false") << '\n';
            }
        } else if (*lrcoef) {
            out << lr_coefficient(partition_arg(lr_lambda), partition_arg(lr_mu), partition_arg(lr_nu)) << '\n';
        }

        if (!cache_dir.empty()) save_tables(cache_dir);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

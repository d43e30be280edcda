// Command-line driver: reduce / gbasis / member / syzygy over skew PBW
// extensions. See README.md for the presentation file format and examples.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewgb/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases, division and syzygies for modules over skew PBW extensions"};
    app.require_subcommand(1);

    skewgb::SessionConfig cfg;
    std::string order_list, module_order = "toprev", basis_dir = "e1..em";
    std::vector<std::string> inputs;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--algebra", cfg.algebra,
                        "preset:<name>(<args>) or a presentation file path")
            ->required();
        sub->add_option("--order", order_list,
                        "comma-separated variables, most significant first (default: spec order)");
        sub->add_option("--module-order", module_order, "top | toprev (default toprev)");
        sub->add_option("--basis-direction", basis_dir, "e1..em | em..e1 (default e1..em)");
        sub->add_option("--rank", cfg.rank, "module rank m (default: inferred from the inputs)");
        sub->add_flag("--machine", cfg.machine, "emit line-delimited JSON records");
        sub->add_option("vectors", inputs, "vector expressions or files (one expression per line)")
            ->required();
    };
    add_common(app.add_subcommand("reduce", "divide f by f1..ft with quotients and remainder"));
    add_common(app.add_subcommand("gbasis", "complete f1..fs to a Groebner basis with H and Q"));
    add_common(app.add_subcommand("member", "decide whether f lies in <f1..ft>"));
    add_common(app.add_subcommand("syzygy", "compute Z(L_G), Z(G) and Z(F)"));

    CLI11_PARSE(app, argc, argv);

    std::string command = app.get_subcommands().front()->get_name();
    if (!order_list.empty()) {
        std::string name;
        for (char c : order_list) {
            if (c == ',' || c == ' ') {
                if (!name.empty()) cfg.order.push_back(name);
                name.clear();
            } else {
                name += c;
            }
        }
        if (!name.empty()) cfg.order.push_back(name);
    }
    if (module_order == "top")
        cfg.module_order = skewgb::ModuleOrder::TOP;
    else if (module_order == "toprev")
        cfg.module_order = skewgb::ModuleOrder::TOPREV;
    else {
        std::cerr << "error: --module-order must be top or toprev\n";
        return skewgb::kParseOrValidation;
    }
    if (basis_dir == "em..e1")
        cfg.basis_reversed = true;
    else if (basis_dir != "e1..em") {
        std::cerr << "error: --basis-direction must be e1..em or em..e1\n";
        return skewgb::kParseOrValidation;
    }

    skewgb::Report rep = skewgb::run_command(command, cfg, inputs);
    if (cfg.machine) {
        for (const auto& r : rep.records) {
            nlohmann::json j{{"kind", r.kind}, {"name", r.name}, {"value", r.value}};
            std::cout << j.dump() << "\n";
        }
    } else {
        for (const auto& l : rep.lines) std::cout << l << "\n";
    }
    return rep.exit_code;
}

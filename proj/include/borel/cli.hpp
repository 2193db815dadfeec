#ifndef BOREL_CLI_HPP
#define BOREL_CLI_HPP

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "borel/borel_set.hpp"
#include "borel/deform.hpp"
#include "borel/enumerate.hpp"
#include "borel/errors.hpp"
#include "borel/graph.hpp"
#include "borel/hilbert.hpp"
#include "borel/io.hpp"
#include "borel/segment.hpp"
#include "borel/term_order.hpp"

namespace borel::cli {

namespace detail {

inline int emit(const std::string& text, const std::string& output_path, std::ostream& out,
                std::ostream& err) {
  if (output_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) {
    err << "error: cannot open '" << output_path << "' for writing\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace detail

/// Runs the command line given as an argument vector (without the program
/// name). Returns the process exit status: 0 on success (endpoint and
/// infeasible outcomes included), 2 on input errors, 3 on internal errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borel-fixed ideal deformation toolkit"};
  app.require_subcommand(1);

  std::string hp_text, ideal_text_in, order_text = "deglex", format = "text", output_path;
  int ambient = 0, max_compose = 3;
  bool as_json = false;
  std::optional<int> ambient_opt;

  auto add_hp = [&](CLI::App* cmd) {
    cmd->add_option("--n", ambient, "ambient projective dimension (variables x_0..x_n)")
        ->required();
    cmd->add_option("--hp", hp_text, "Hilbert polynomial, e.g. \"6t-5\"")->required();
  };
  auto add_ideal = [&](CLI::App* cmd) {
    cmd->add_option("--ideal", ideal_text_in,
                    "generators with optional truncation, e.g. \"x3^2, x3*x2^2, x2^4 @ 8\"")
        ->required();
    cmd->add_option("--n", ambient, "ambient dimension override");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output_path, "write to a file instead of stdout");
  };

  CLI::App* c_enum = app.add_subcommand("enumerate", "all Borel ideals with a Hilbert polynomial");
  add_hp(c_enum);
  add_output(c_enum);
  c_enum->add_flag("--json", as_json, "JSON output");

  CLI::App* c_deform = app.add_subcommand("deform", "the deformation selected by a term order");
  add_ideal(c_deform);
  c_deform->add_option("--order", order_text, "deglex | degrevlex | weights=w0,w1,...");
  c_deform->add_flag("--json", as_json, "JSON output");
  add_output(c_deform);

  CLI::App* c_all = app.add_subcommand("deform-all", "every rational deformation of an ideal");
  add_ideal(c_all);
  c_all->add_flag("--json", as_json, "JSON output");
  add_output(c_all);

  CLI::App* c_graph = app.add_subcommand("graph", "order-driven deformation graph of a scheme");
  add_hp(c_graph);
  c_graph->add_option("--order", order_text, "deglex | degrevlex | weights=w0,w1,...");
  c_graph->add_option("--out", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  add_output(c_graph);

  CLI::App* c_inc = app.add_subcommand("incidence", "Borel incidence graph of a scheme");
  add_hp(c_inc);
  c_inc->add_option("--out", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  c_inc->add_option("--max-compose", max_compose, "compatible-subset size cap (default 3)");
  add_output(c_inc);

  CLI::App* c_seg = app.add_subcommand("segment", "segment certificate via exact LP");
  add_ideal(c_seg);
  c_seg->add_flag("--json", as_json, "JSON output");
  add_output(c_seg);

  CLI::App* c_flat = app.add_subcommand("verify-flat", "flatness check for every deformation");
  add_ideal(c_flat);
  c_flat->add_flag("--json", as_json, "JSON output");
  add_output(c_flat);

  std::vector<const char*> argv;
  argv.push_back("borel");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (c_deform->count("--n") || c_all->count("--n") || c_seg->count("--n") ||
      c_flat->count("--n"))
    ambient_opt = ambient;

  try {
    std::ostringstream buf;
    if (*c_enum) {
      hilbert_polynomial p = parse_polynomial(hp_text);
      auto ideals = enumerate_ideals(ambient, p);
      if (as_json) {
        json j = json::array();
        for (const borel_set& b : ideals) j.push_back(ideal_json(saturate(b)));
        buf << j.dump(2) << "\n";
      } else {
        buf << "# " << ideals.size() << " Borel-fixed ideals with Hilbert polynomial "
            << to_string(p) << " (Gotzmann number " << gotzmann_number(p) << ")\n";
        for (const borel_set& b : ideals) buf << ideal_text(saturate(b)) << "\n";
      }
      return detail::emit(buf.str(), output_path, out, err);
    }
    if (*c_deform) {
      borel_ideal ideal = parse_and_resolve_ideal(ideal_text_in, ambient_opt);
      term_order ord = parse_order(order_text);
      auto d = to_deformation(ideal.stratum, ord);
      if (as_json) {
        json j;
        if (d) {
          j = deformation_json(*d, verify_flat(*d));
          j["endpoint"] = false;
        } else {
          j["endpoint"] = true;
          j["ideal"] = ideal_json(ideal);
        }
        buf << j.dump(2) << "\n";
      } else {
        buf << (d ? ideal_text(saturate(d->target)) : std::string("endpoint")) << "\n";
      }
      return detail::emit(buf.str(), output_path, out, err);
    }
    if (*c_all) {
      borel_ideal ideal = parse_and_resolve_ideal(ideal_text_in, ambient_opt);
      auto defs = all_deformations(ideal.stratum);
      if (as_json) {
        json j = json::array();
        for (const deformation& d : defs) j.push_back(deformation_json(d, verify_flat(d)));
        buf << j.dump(2) << "\n";
      } else {
        buf << "# " << defs.size() << " rational deformations of " << ideal_text(ideal) << "\n";
        for (const deformation& d : defs) {
          buf << ideal_text(saturate(d.target)) << "  [stratum " << d.stratum << ", "
              << to_string(d.alpha) << " <-> " << to_string(d.beta) << ", family size "
              << d.family.size() << "]\n";
        }
      }
      return detail::emit(buf.str(), output_path, out, err);
    }
    if (*c_graph) {
      hilbert_polynomial p = parse_polynomial(hp_text);
      term_order ord = parse_order(order_text);
      deform_graph g = deformation_graph(ambient, p, ord);
      buf << (format == "json" ? to_json(g).dump(2) + "\n" : to_dot(g));
      return detail::emit(buf.str(), output_path, out, err);
    }
    if (*c_inc) {
      hilbert_polynomial p = parse_polynomial(hp_text);
      deform_graph g = incidence_graph(ambient, p, max_compose);
      buf << (format == "json" ? to_json(g).dump(2) + "\n" : to_dot(g));
      return detail::emit(buf.str(), output_path, out, err);
    }
    if (*c_seg) {
      borel_ideal ideal = parse_and_resolve_ideal(ideal_text_in, ambient_opt);
      auto cert = find_segment_order(ideal.stratum);
      if (as_json) {
        json j;
        j["feasible"] = cert.has_value();
        if (cert) {
          json ws = json::array();
          for (const mpz_class& w : cert->weights) ws.push_back(w.get_str());
          j["omega"] = std::move(ws);
          j["verified"] = cert->verified;
        }
        buf << j.dump(2) << "\n";
      } else if (!cert) {
        buf << "infeasible\n";
      } else {
        buf << "omega = [";
        for (std::size_t i = 0; i < cert->weights.size(); ++i)
          buf << (i ? ", " : "") << cert->weights[i].get_str();
        buf << "]\n" << matrix_text(*cert);
      }
      return detail::emit(buf.str(), output_path, out, err);
    }
    if (*c_flat) {
      borel_ideal ideal = parse_and_resolve_ideal(ideal_text_in, ambient_opt);
      auto defs = all_deformations(ideal.stratum);
      bool all_ok = true;
      json arr = json::array();
      for (const deformation& d : defs) {
        bool ok = verify_flat(d);
        all_ok = all_ok && ok;
        if (as_json)
          arr.push_back(deformation_json(d, ok));
        else
          buf << (ok ? "flat      " : "NOT FLAT  ") << ideal_text(saturate(d.target)) << "\n";
      }
      if (as_json) {
        json j;
        j["deformations"] = std::move(arr);
        j["all_flat"] = all_ok;
        buf << j.dump(2) << "\n";
      } else {
        buf << "# " << defs.size() << " deformations, "
            << (all_ok ? "all flat" : "FLATNESS FAILURE") << "\n";
      }
      return detail::emit(buf.str(), output_path, out, err);
    }
  } catch (const invariant_violation& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace borel::cli

#endif

#include "playbench/frontends/cli.hpp"

#include <csignal>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "playbench/csv_io.hpp"
#include "playbench/frontends/http_server.hpp"
#include "playbench/frontends/service.hpp"
#include "playbench/json_io.hpp"
#include "playbench/session.hpp"

namespace playbench::frontends {
namespace {

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 1;

struct TrainFlags {
  std::string gate;
  double lr = 0.0;
  std::string init = "zeros";
  std::uint64_t seed = 0;
  std::uint64_t max_epochs = kDefaultMaxEpochs;
  bool shuffle = false;
  std::string trace_path;
};

void add_train_flags(CLI::App& cmd, TrainFlags& f) {
  cmd.add_option("--lr", f.lr, "learning rate (> 0)")->capture_default_str();
  cmd.add_option("--init", f.init, "weight initialisation")
      ->check(CLI::IsMember({"zeros", "uniform"}))
      ->capture_default_str();
  cmd.add_option("--seed", f.seed, "seed for uniform init and shuffling")->capture_default_str();
  cmd.add_option("--max-epochs", f.max_epochs, "epoch cap")->capture_default_str();
  cmd.add_flag("--shuffle", f.shuffle, "reshuffle the table every epoch");
  cmd.add_option("--trace", f.trace_path, "write the trace to PATH (.csv for CSV, else JSON; - for stdout)");
}

bool write_output(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path == "-") {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "cannot open " << path << " for writing\n";
    return false;
  }
  file << text;
  return static_cast<bool>(file);
}

std::string summary_line(const Session& session) {
  std::string line = session.trace().converged ? "converged=true" : "converged=false";
  line += " epochs=" + std::to_string(session.trace().epochs_used);
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, perceptron::State>) {
          line += " w1=" + format_real(s.w1) + " w2=" + format_real(s.w2);
        } else if constexpr (std::is_same_v<S, mlp321::State>) {
          for (std::size_t i = 0; i < s.w.size(); ++i) line += " w" + std::to_string(i + 1) + "=" + format_real(s.w[i]);
          if (s.biased()) {
            for (std::size_t i = 0; i < s.b.size(); ++i) line += " b" + std::to_string(i + 1) + "=" + format_real(s.b[i]);
          }
        }
      },
      session.state());
  return line;
}

int train_and_report(SessionConfig config, const TrainFlags& flags, std::ostream& out, std::ostream& err) {
  config.init = flags.init == "uniform" ? InitPolicy::uniform() : InitPolicy::zeros();
  config.seed = flags.seed;
  config.max_epochs = flags.max_epochs;
  config.shuffle = flags.shuffle;

  Session session(config);
  session.run();
  out << summary_line(session) << "\n";
  if (!flags.trace_path.empty()) {
    const bool csv = flags.trace_path.size() > 4 && flags.trace_path.ends_with(".csv");
    std::string text = session.export_trace(csv ? TraceFormat::csv : TraceFormat::json);
    if (!csv) text += "\n";
    if (!write_output(flags.trace_path, text, out, err)) return kRuntimeError;
  }
  return 0;
}

HttpServer* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"playbench: deterministic perceptron, 3-2-1 network and nearest-center clustering lab"};
  app.require_subcommand(1);

  TrainFlags pflags;
  pflags.lr = kPerceptronDefaultLr;
  pflags.gate = "and";
  auto* perceptron_cmd = app.add_subcommand("perceptron", "train the two-input perceptron on AND/OR");
  perceptron_cmd->add_option("--gate", pflags.gate, "logic gate")
      ->check(CLI::IsMember({"and", "or"}))
      ->capture_default_str();
  add_train_flags(*perceptron_cmd, pflags);

  TrainFlags mflags;
  mflags.lr = kMlpDefaultLr;
  mflags.gate = "and3";
  std::string mode = "paper";
  bool no_zero_row = false;
  auto* mlp_cmd = app.add_subcommand("mlp", "train the 3-2-1 network on AND3/OR3");
  mlp_cmd->add_option("--gate", mflags.gate, "logic gate")
      ->check(CLI::IsMember({"and3", "or3"}))
      ->capture_default_str();
  mlp_cmd->add_option("--mode", mode, "paper: no biases; bias: per-neuron biases")
      ->check(CLI::IsMember({"paper", "bias"}))
      ->capture_default_str();
  mlp_cmd->add_flag("--no-zero-row", no_zero_row, "drop the (0,0,0) row from the table");
  add_train_flags(*mlp_cmd, mflags);

  std::uint64_t n = 100, k = 5, kseed = 0;
  std::string out_path = "-";
  auto* kmeans_cmd = app.add_subcommand("kmeans", "one nearest-center assignment pass over a random cloud");
  kmeans_cmd->add_option("--n", n, "number of points")->capture_default_str();
  kmeans_cmd->add_option("--k", k, "number of mass centers")->capture_default_str();
  kmeans_cmd->add_option("--seed", kseed, "generator seed")->capture_default_str();
  kmeans_cmd->add_option("--out", out_path, "output path, - for stdout")->capture_default_str();

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string data_dir;
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP session service");
  serve_cmd->add_option("--port", port, "listen port")->envname("PLAYBENCH_PORT")->capture_default_str();
  serve_cmd->add_option("--host", host, "listen address")->capture_default_str();
  serve_cmd->add_option("--data-dir", data_dir, "directory receiving finished traces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (*perceptron_cmd) {
      SessionConfig config = default_config(Model::perceptron);
      config.gate = pflags.gate == "or" ? Gate::or2 : Gate::and2;
      config.lr = pflags.lr;
      return train_and_report(config, pflags, out, err);
    }
    if (*mlp_cmd) {
      SessionConfig config = default_config(Model::mlp321);
      config.gate = mflags.gate == "or3" ? Gate::or3 : Gate::and3;
      config.mode = mode == "bias" ? mlp321::Mode::bias_augmented : mlp321::Mode::paper_faithful;
      config.include_zero_row = !no_zero_row;
      config.lr = mflags.lr;
      return train_and_report(config, mflags, out, err);
    }
    if (*kmeans_cmd) {
      SessionConfig config = default_config(Model::kmeans);
      config.n = n;
      config.k = k;
      config.seed = kseed;
      const Session session(config);
      const auto& result = std::get<KMeansResult>(session.state());
      return write_output(out_path, kmeans_to_json(result).dump() + "\n", out, err) ? 0 : kRuntimeError;
    }
    if (*serve_cmd) {
      ServiceOptions options;
      if (!data_dir.empty()) options.data_dir = data_dir;
      SessionService service(options);
      HttpServer server(service);
      const int bound = server.bind(host, port);
      if (bound < 0) {
        err << "cannot bind " << host << ":" << port << "\n";
        return kRuntimeError;
      }
      out << "listening on http://" << host << ":" << bound << "/api/v1\n" << std::flush;
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      const bool ok = server.listen_after_bind();
      g_server = nullptr;
      return ok ? 0 : kRuntimeError;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::invalid_config || e.code() == Errc::invalid_range || e.code() == Errc::invalid_k ||
                   e.code() == Errc::empty_cloud || e.code() == Errc::invalid_input
               ? kUsageError
               : kRuntimeError;
  }
  return kUsageError;
}

}  // namespace playbench::frontends

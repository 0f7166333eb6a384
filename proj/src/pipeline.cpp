// Copyright 2026 The xamr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xamr/pipeline.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "xamr/error.hpp"

namespace xamr {
namespace {

using nlohmann::json;

std::string fnv1a64_hex(const std::string &data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string iso_utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// The line protocol reserves newline as the delimiter.
std::string scrub_newlines(const std::string &sentence) {
  std::string out = sentence;
  for (char &c : out)
    if (c == '\n' || c == '\r') c = ' ';
  return out;
}

struct SubprocessResult {
  std::string out;
  std::string err;
  int exit_code = -1;
};

void set_nonblocking(int fd) { fcntl(fd, F_SETFL, fcntl(fd, F_GETFL) | O_NONBLOCK); }

SubprocessResult run_subprocess(const std::string &command, const std::string &input,
                                double timeout_seconds) {
  static std::once_flag sigpipe_once;
  std::call_once(sigpipe_once, [] { signal(SIGPIPE, SIG_IGN); });

  int in_pipe[2], out_pipe[2], err_pipe[2];
  if (pipe(in_pipe) || pipe(out_pipe) || pipe(err_pipe))
    throw DataError("adapter: cannot create pipes");
  pid_t pid = fork();
  if (pid < 0) throw DataError("adapter: fork failed");
  if (pid == 0) {
    dup2(in_pipe[0], 0);
    dup2(out_pipe[1], 1);
    dup2(err_pipe[1], 2);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1], err_pipe[0],
                   err_pipe[1]})
      close(fd);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char *>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  close(err_pipe[1]);
  int to_child = in_pipe[1];
  int from_out = out_pipe[0];
  int from_err = err_pipe[0];
  set_nonblocking(to_child);
  set_nonblocking(from_out);
  set_nonblocking(from_err);

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration<double>(timeout_seconds);
  auto timed_out = [&] {
    kill(pid, SIGKILL);
    int status = 0;
    waitpid(pid, &status, 0);
    close(to_child);
    close(from_out);
    close(from_err);
    throw DataError("adapter timed out after " + std::to_string(timeout_seconds) +
                    "s: " + command);
  };

  SubprocessResult result;
  size_t written = 0;
  bool in_open = true, out_open = true, err_open = true;
  if (input.empty()) {
    close(to_child);
    in_open = false;
  }
  char buf[4096];
  while (in_open || out_open || err_open) {
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
                         deadline - std::chrono::steady_clock::now())
                         .count();
    if (remaining <= 0) timed_out();

    struct pollfd fds[3];
    int nfds = 0;
    int in_idx = -1, out_idx = -1, err_idx = -1;
    if (in_open) { in_idx = nfds; fds[nfds++] = {to_child, POLLOUT, 0}; }
    if (out_open) { out_idx = nfds; fds[nfds++] = {from_out, POLLIN, 0}; }
    if (err_open) { err_idx = nfds; fds[nfds++] = {from_err, POLLIN, 0}; }
    int rc = poll(fds, nfds, static_cast<int>(std::min<long long>(remaining, 1000)));
    if (rc < 0) {
      if (errno == EINTR) continue;
      timed_out();
    }

    if (in_idx >= 0 && (fds[in_idx].revents & (POLLOUT | POLLERR | POLLHUP))) {
      ssize_t n = write(to_child, input.data() + written, input.size() - written);
      if (n > 0) {
        written += static_cast<size_t>(n);
      } else if (n < 0 && errno != EAGAIN && errno != EINTR) {
        written = input.size();  // child closed its stdin; stop feeding
      }
      if (written >= input.size()) {
        close(to_child);
        in_open = false;
      }
    }
    auto drain = [&](int idx, int fd, bool *open, std::string *sink) {
      if (idx < 0 || !(fds[idx].revents & (POLLIN | POLLHUP | POLLERR))) return;
      ssize_t n = read(fd, buf, sizeof(buf));
      if (n > 0) {
        sink->append(buf, static_cast<size_t>(n));
      } else if (n == 0 || (n < 0 && errno != EAGAIN && errno != EINTR)) {
        close(fd);
        *open = false;
      }
    };
    drain(out_idx, from_out, &out_open, &result.out);
    drain(err_idx, from_err, &err_open, &result.err);
  }

  int status = 0;
  while (true) {
    pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0 && errno != EINTR) break;
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      throw DataError("adapter timed out after " + std::to_string(timeout_seconds) +
                      "s: " + command);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  return result;
}

std::vector<std::string> split_lines(const std::string &text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool blank(const std::string &s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

std::vector<std::string> split_blocks(const std::string &text) {
  std::vector<std::string> blocks;
  std::string current;
  for (const std::string &line : split_lines(text)) {
    if (blank(line)) {
      if (!current.empty()) blocks.push_back(current);
      current.clear();
    } else {
      current += line;
      current += '\n';
    }
  }
  if (!current.empty()) blocks.push_back(current);
  return blocks;
}

std::string excerpt(const std::string &text, size_t limit = 400) {
  if (text.size() <= limit) return text;
  return text.substr(0, limit) + "...";
}

// Split "http://host:port/path" into client base and path.
std::pair<std::string, std::string> split_url(const std::string &url) {
  size_t scheme = url.find("://");
  size_t path_start = scheme == std::string::npos ? url.find('/')
                                                  : url.find('/', scheme + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::vector<std::string> invoke_http(const AdapterSpec &adapter,
                                     const std::vector<std::string> &batch,
                                     int batch_index) {
  auto [base, path] = split_url(adapter.url);
  httplib::Client client(base);
  client.set_connection_timeout(std::chrono::duration<double>(adapter.timeout_seconds));
  client.set_read_timeout(std::chrono::duration<double>(adapter.timeout_seconds));
  client.set_write_timeout(std::chrono::duration<double>(adapter.timeout_seconds));

  json request;
  request[adapter.request_field] = batch;
  httplib::Result response = client.Post(path, request.dump(), "application/json");
  if (!response)
    throw DataError("adapter batch " + std::to_string(batch_index) +
                    ": HTTP request to " + adapter.url + " failed: " +
                    httplib::to_string(response.error()));
  if (response->status != 200)
    throw DataError("adapter batch " + std::to_string(batch_index) + ": HTTP " +
                    std::to_string(response->status) + " from " + adapter.url);
  json body = json::parse(response->body, nullptr, false);
  if (body.is_discarded() || !body.contains(adapter.response_field) ||
      !body[adapter.response_field].is_array())
    throw DataError("adapter batch " + std::to_string(batch_index) +
                    ": malformed JSON response from " + adapter.url);
  std::vector<std::string> outputs;
  for (const json &item : body[adapter.response_field])
    outputs.push_back(item.get<std::string>());
  return outputs;
}

// One adapter call for one batch; returns raw output lines (translation) or
// blocks (parsing) depending on the caller's splitter.
std::string invoke_subprocess(const AdapterSpec &adapter,
                              const std::vector<std::string> &batch,
                              int batch_index) {
  std::string input;
  for (const std::string &sentence : batch) {
    input += scrub_newlines(sentence);
    input += '\n';
  }
  SubprocessResult result =
      run_subprocess(adapter.command, input, adapter.timeout_seconds);
  if (result.exit_code != 0)
    throw DataError("adapter batch " + std::to_string(batch_index) + ": command '" +
                    adapter.command + "' exited with status " +
                    std::to_string(result.exit_code) + ": " + excerpt(result.err));
  return result.out;
}

std::vector<std::string> invoke_lines(const AdapterSpec &adapter,
                                      const std::vector<std::string> &batch,
                                      int batch_index, AdapterStats *stats) {
  if (stats) stats->invocations++;
  std::vector<std::string> lines;
  if (adapter.kind == AdapterSpec::Kind::Http) {
    lines = invoke_http(adapter, batch, batch_index);
  } else {
    lines = split_lines(invoke_subprocess(adapter, batch, batch_index));
  }
  if (lines.size() != batch.size())
    throw DataError("adapter batch " + std::to_string(batch_index) + ": sent " +
                    std::to_string(batch.size()) + " sentences but received " +
                    std::to_string(lines.size()) + " lines");
  return lines;
}

std::vector<std::string> invoke_blocks(const AdapterSpec &adapter,
                                       const std::vector<std::string> &batch,
                                       int batch_index, AdapterStats *stats) {
  if (stats) stats->invocations++;
  std::vector<std::string> blocks;
  if (adapter.kind == AdapterSpec::Kind::Http) {
    blocks = invoke_http(adapter, batch, batch_index);
  } else {
    blocks = split_blocks(invoke_subprocess(adapter, batch, batch_index));
  }
  if (blocks.size() != batch.size())
    throw DataError("adapter batch " + std::to_string(batch_index) + ": sent " +
                    std::to_string(batch.size()) + " sentences but received " +
                    std::to_string(blocks.size()) + " graph blocks");
  return blocks;
}

template <typename Invoke>
std::vector<std::string> batched(const std::vector<std::string> &sentences,
                                 int batch_size, Invoke &&invoke) {
  std::vector<std::string> outputs;
  outputs.reserve(sentences.size());
  int batch_index = 0;
  for (size_t start = 0; start < sentences.size();
       start += static_cast<size_t>(batch_size), ++batch_index) {
    size_t end = std::min(sentences.size(), start + static_cast<size_t>(batch_size));
    std::vector<std::string> batch(sentences.begin() + start, sentences.begin() + end);
    std::vector<std::string> result = invoke(batch, batch_index);
    outputs.insert(outputs.end(), result.begin(), result.end());
  }
  return outputs;
}

// Content-addressed single-file cache. Each entry embeds its full key (so
// a filename collision degrades to a miss) and a value hash that detects
// corruption.
class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  bool enabled() const { return !dir_.empty(); }

  std::optional<std::string> get(const std::string &key) const {
    if (!enabled()) return std::nullopt;
    std::filesystem::path file = entry_path(key);
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    json entry = json::parse(buffer.str(), nullptr, false);
    if (entry.is_discarded() || !entry.contains("key") || !entry.contains("value") ||
        !entry.contains("sha"))
      throw DataError("cache corruption: unreadable entry " + file.string());
    if (entry["key"].get<std::string>() != key) return std::nullopt;  // collision
    std::string value = entry["value"].get<std::string>();
    if (fnv1a64_hex(value) != entry["sha"].get<std::string>())
      throw DataError("cache corruption: hash mismatch in " + file.string());
    return value;
  }

  void put(const std::string &key, const std::string &value) const {
    if (!enabled()) return;
    json entry;
    entry["key"] = key;
    entry["value"] = value;
    entry["sha"] = fnv1a64_hex(value);
    std::filesystem::path file = entry_path(key);
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      if (!out) throw IoError("cannot write cache entry: " + tmp.string());
      out << entry.dump();
    }
    std::filesystem::rename(tmp, file);
  }

 private:
  std::filesystem::path entry_path(const std::string &key) const {
    return std::filesystem::path(dir_) / (fnv1a64_hex(key) + ".json");
  }

  std::string dir_;
};

}  // namespace

std::string AdapterSpec::identity() const {
  std::string base = kind == Kind::Http ? "http:" + url + ":" + request_field + ":" +
                                              response_field
                                        : "subprocess:" + command;
  if (!version.empty()) base += ":" + version;
  return base;
}

std::vector<std::string> translate_corpus(const std::vector<std::string> &sentences,
                                          const AdapterSpec &adapter,
                                          AdapterStats *stats) {
  return batched(sentences, std::max(1, adapter.batch_size),
                 [&](const std::vector<std::string> &batch, int index) {
                   return invoke_lines(adapter, batch, index, stats);
                 });
}

std::vector<AmrGraph> parse_corpus(const std::vector<std::string> &sentences,
                                   const AdapterSpec &adapter, AdapterStats *stats,
                                   const PenmanOptions &penman) {
  std::vector<std::string> blocks =
      batched(sentences, std::max(1, adapter.batch_size),
              [&](const std::vector<std::string> &batch, int index) {
                return invoke_blocks(adapter, batch, index, stats);
              });
  std::vector<AmrGraph> graphs;
  graphs.reserve(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i) {
    try {
      graphs.push_back(parse_penman(blocks[i], penman));
    } catch (const ParseError &e) {
      throw DataError("parser adapter block " + std::to_string(i) +
                      " is not valid Penman: " + e.what());
    }
  }
  return graphs;
}

std::vector<PipelineRecord> run_pipeline(const std::vector<PipelineInput> &inputs,
                                         const AdapterSpec &translator,
                                         const AdapterSpec &parser,
                                         const std::string &cache_dir,
                                         const std::string &source_language,
                                         PipelineRunStats *stats) {
  Cache cache(cache_dir);
  PipelineRunStats local_stats;
  if (!stats) stats = &local_stats;

  std::vector<PipelineRecord> records(inputs.size());
  for (size_t i = 0; i < inputs.size(); ++i) {
    records[i].id = inputs[i].id;
    records[i].source_sentence = inputs[i].sentence;
    records[i].source_language = source_language;
    records[i].translator_id = translator.identity();
    records[i].parser_id = parser.identity();
  }

  // Translation step, cache first.
  std::vector<size_t> misses;
  for (size_t i = 0; i < inputs.size(); ++i) {
    std::string key = "translate\x1f" + translator.identity() + "\x1f" +
                      scrub_newlines(inputs[i].sentence);
    if (auto hit = cache.get(key)) {
      records[i].translated_sentence = *hit;
      stats->translation_cache_hits++;
    } else {
      misses.push_back(i);
    }
  }
  if (!misses.empty()) {
    std::vector<std::string> pending;
    pending.reserve(misses.size());
    for (size_t i : misses) pending.push_back(inputs[i].sentence);
    std::vector<std::string> translated =
        translate_corpus(pending, translator, &stats->translator);
    std::string now = iso_utc_now();
    for (size_t k = 0; k < misses.size(); ++k) {
      records[misses[k]].translated_sentence = translated[k];
      records[misses[k]].translated_at = now;
      cache.put("translate\x1f" + translator.identity() + "\x1f" +
                    scrub_newlines(inputs[misses[k]].sentence),
                translated[k]);
    }
  }

  // Parse step over the translated sentences.
  misses.clear();
  for (size_t i = 0; i < records.size(); ++i) {
    std::string key = "parse\x1f" + parser.identity() + "\x1f" +
                      scrub_newlines(records[i].translated_sentence);
    if (auto hit = cache.get(key)) {
      records[i].graph = parse_penman(*hit);
      stats->parse_cache_hits++;
    } else {
      misses.push_back(i);
    }
  }
  if (!misses.empty()) {
    std::vector<std::string> pending;
    pending.reserve(misses.size());
    for (size_t i : misses) pending.push_back(records[i].translated_sentence);
    std::vector<AmrGraph> graphs = parse_corpus(pending, parser, &stats->parser);
    std::string now = iso_utc_now();
    for (size_t k = 0; k < misses.size(); ++k) {
      records[misses[k]].graph = graphs[k];
      records[misses[k]].parsed_at = now;
      cache.put("parse\x1f" + parser.identity() + "\x1f" +
                    scrub_newlines(records[misses[k]].translated_sentence),
                serialize_penman(graphs[k]));
    }
  }
  return records;
}

void write_predictions(const std::vector<PipelineRecord> &records,
                       const std::string &amr_path,
                       const std::string &provenance_path) {
  std::vector<CorpusEntry> entries;
  entries.reserve(records.size());
  for (const PipelineRecord &r : records) {
    CorpusEntry entry;
    entry.id = r.id;
    entry.sentence = r.translated_sentence;
    entry.graph = r.graph;
    entries.push_back(std::move(entry));
  }
  write_corpus(entries, amr_path);

  json sidecar = json::array();
  for (const PipelineRecord &r : records) {
    json item;
    item["id"] = r.id;
    item["source_sentence"] = r.source_sentence;
    item["source_language"] = r.source_language;
    item["translated_sentence"] = r.translated_sentence;
    item["penman"] = serialize_penman(r.graph);
    item["translated_at"] = r.translated_at;
    item["parsed_at"] = r.parsed_at;
    item["translator"] = r.translator_id;
    item["parser"] = r.parser_id;
    sidecar.push_back(std::move(item));
  }
  std::ofstream out(provenance_path, std::ios::binary);
  if (!out) throw IoError("cannot write provenance file: " + provenance_path);
  out << sidecar.dump(2) << '\n';
}

}  // namespace xamr

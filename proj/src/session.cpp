/*
 *   Copyright 2026 The Gradix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gradix/session.hpp"

#include <filesystem>
#include <ostream>

#include "gradix/csv.hpp"
#include "gradix/error.hpp"

namespace gradix {

Session::Session(ResiduatedLatticePtr lattice) : lattice_(lattice), instance_(std::move(lattice)) {}

void Session::declare(const std::vector<std::pair<Attribute, ValueType>>& types) {
  for (const auto& [a, t] : types) registry_.declare(a, t);
}

Catalog Session::catalog() const {
  Catalog c = catalog_of(instance_);
  for (const auto& [name, e] : views_) c.emplace(name, scheme_of(e, catalog_of(instance_)));
  return c;
}

std::string Session::path_of(const std::string& p) const {
  std::filesystem::path path(p);
  if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
  return path.string();
}

RaExpr Session::resolve(const RaExpr& e) {
  if (e->op == RaOp::rel) {
    auto it = views_.find(e->name);
    return it == views_.end() ? e : it->second;
  }
  if (e->op == RaOp::singleton) {
    if (!registry_.declared(e->attribute)) {
      registry_.declare(e->attribute, type_of(e->value));
      return e;
    }
    if (registry_.type(e->attribute) == ValueType::decimal && type_of(e->value) == ValueType::integer) {
      return ra::singleton(e->attribute, static_cast<double>(std::get<std::int64_t>(e->value)));
    }
    registry_.check(e->attribute, e->value);
    return e;
  }
  if (e->kids.empty()) return e;
  auto n = std::make_shared<RaNode>(*e);
  for (auto& k : n->kids) k = resolve(k);
  return n;
}

PtcExpr Session::resolve(const PtcExpr& e) {
  auto n = std::make_shared<PtcNode>(*e);
  if (n->op == PtcOp::atom) n->ra = resolve(n->ra);
  for (auto& k : n->kids) k = resolve(k);
  return n;
}

void Session::emit(const RankedDataTable& t, std::ostream& out) {
  ++emitted_;
  if (out_dir.empty()) {
    out << write_csv(t) << "\n";
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  save_csv((std::filesystem::path(out_dir) / ("result_" + std::to_string(emitted_) + ".csv")).string(), t);
}

void Session::run(const Script& script, std::ostream& out, std::ostream& err) {
  for (const auto& st : script.statements) {
    const std::string where = "line " + std::to_string(st.line) + ": ";
    try {
      switch (st.kind) {
        case Statement::Kind::load: {
          if (views_.count(st.name)) throw PreconditionError(st.name + " is already a view");
          declare(st.types);
          instance_.add(st.name, load_csv(path_of(st.path), registry_, lattice_));
          break;
        }
        case Statement::Kind::var:
          for (const auto& a : st.scheme) {
            if (!registry_.declared(a)) throw SchemeError("unknown attribute " + a);
          }
          break;
        case Statement::Kind::let: {
          if (instance_.contains(st.name) || views_.count(st.name)) {
            throw PreconditionError(st.name + " is already defined");
          }
          RaExpr e = resolve(st.ra);
          scheme_of(e, catalog_of(instance_));
          views_.emplace(st.name, e);
          break;
        }
        case Statement::Kind::eval:
          emit(eval_ra(resolve(st.ra), instance_), out);
          break;
        case Statement::Kind::evalptc: {
          PtcExpr e = resolve(st.ptc);
          check_ptc(e, catalog_of(instance_));
          if (auto n = empty_quantifier_domains(e, instance_)) {
            err << "warning: " << where << n << " quantifier(s) range over an attribute with no values\n";
          }
          emit(eval_ptc(e, instance_), out);
          break;
        }
        case Statement::Kind::compile: {
          const Catalog c = catalog();
          check_ptc(st.ptc, c);
          out << print_ra(compile_ptc_to_ra(st.ptc, c)) << "\n";
          break;
        }
        case Statement::Kind::save: {
          auto it = views_.find(st.name);
          const RankedDataTable t = it != views_.end() ? eval_ra(it->second, instance_) : instance_.get(st.name);
          save_csv(path_of(st.path), t);
          break;
        }
      }
    } catch (const IoError& e) {
      throw IoError(where + e.what());
    } catch (const Error& e) {
      throw PreconditionError(where + e.what());
    }
  }
}

int run_script(const Script& script, Session& session, std::ostream& out, std::ostream& err) {
  try {
    session.run(script, out, err);
    return exit_ok;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_io_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_query_error;
  }
}

int run_script_text(const std::string& text, Session& session, std::ostream& out, std::ostream& err) {
  Script script;
  try {
    script = parse_script(text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_query_error;
  }
  return run_script(script, session, out, err);
}

}  // namespace gradix

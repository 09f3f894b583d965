// Copyright 2026 The Wikinames Authors
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

#include "wikinames/entity_store.hpp"

#include <sqlite3.h>

#include <cstring>
#include <utility>

#include "wikinames/errors.hpp"

namespace wikinames {
namespace {

constexpr const char* kDbFileName = "entities.sqlite";
constexpr const char* kSchemaVersion = "1";

constexpr const char* kSchema = R"sql(
CREATE TABLE IF NOT EXISTS meta(
  key TEXT PRIMARY KEY,
  value TEXT NOT NULL
) WITHOUT ROWID;
CREATE TABLE IF NOT EXISTS entities(
  qid_num INTEGER PRIMARY KEY,
  qid TEXT NOT NULL UNIQUE,
  doc TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS entity_langs(
  lang TEXT NOT NULL,
  qid_num INTEGER NOT NULL,
  PRIMARY KEY(lang, qid_num)
) WITHOUT ROWID;
CREATE TABLE IF NOT EXISTS entity_classes(
  class TEXT NOT NULL,
  qid_num INTEGER NOT NULL,
  PRIMARY KEY(class, qid_num)
) WITHOUT ROWID;
-- put() deletes stale rows by qid_num, the second primary-key column;
-- without these indexes every delete degenerates into a table scan.
CREATE INDEX IF NOT EXISTS entity_langs_qid ON entity_langs(qid_num);
CREATE INDEX IF NOT EXISTS entity_classes_qid ON entity_classes(qid_num);
CREATE TABLE IF NOT EXISTS closure_members(
  root TEXT NOT NULL,
  member TEXT NOT NULL,
  PRIMARY KEY(root, member)
) WITHOUT ROWID;
)sql";

// RAII wrapper around one prepared statement, reset after each use.
class Stmt {
 public:
  Stmt() = default;
  Stmt(sqlite3* db, const char* sql) { prepare(db, sql); }
  ~Stmt() { sqlite3_finalize(stmt_); }
  Stmt(const Stmt&) = delete;
  Stmt& operator=(const Stmt&) = delete;

  void prepare(sqlite3* db, const char* sql) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) {
      throw IoError(std::string("store: prepare failed: ") + sqlite3_errmsg(db));
    }
  }

  Stmt& bind(int idx, std::string_view text) {
    sqlite3_bind_text(stmt_, idx, text.data(), static_cast<int>(text.size()),
                      SQLITE_TRANSIENT);
    return *this;
  }
  Stmt& bind(int idx, std::int64_t value) {
    sqlite3_bind_int64(stmt_, idx, value);
    return *this;
  }

  // Executes to completion; for statements without result rows.
  void exec(sqlite3* db) {
    const int rc = sqlite3_step(stmt_);
    if (rc != SQLITE_DONE) {
      sqlite3_reset(stmt_);
      throw IoError(std::string("store: ") + sqlite3_errmsg(db));
    }
    sqlite3_reset(stmt_);
    sqlite3_clear_bindings(stmt_);
  }

  // Steps one row; returns false when exhausted (and resets).
  bool row(sqlite3* db) {
    const int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    sqlite3_reset(stmt_);
    sqlite3_clear_bindings(stmt_);
    if (rc != SQLITE_DONE) {
      throw IoError(std::string("store: ") + sqlite3_errmsg(db));
    }
    return false;
  }

  void reset() {
    sqlite3_reset(stmt_);
    sqlite3_clear_bindings(stmt_);
  }

  std::string_view column_text(int col) const {
    const unsigned char* p = sqlite3_column_text(stmt_, col);
    if (p == nullptr) return {};
    return {reinterpret_cast<const char*>(p),
            static_cast<std::size_t>(sqlite3_column_bytes(stmt_, col))};
  }
  std::int64_t column_int64(int col) const {
    return sqlite3_column_int64(stmt_, col);
  }

 private:
  sqlite3_stmt* stmt_ = nullptr;
};

}  // namespace

struct EntityStore::Impl {
  sqlite3* db = nullptr;
  std::filesystem::path dir;
  bool writable = false;

  Stmt put_entity, del_langs, del_classes, ins_lang, ins_class;
  Stmt get_by_num, count_entities;
  Stmt begin_txn, commit_txn, rollback_txn;
  Stmt del_closure, ins_closure, scan_closure, count_closure;
  Stmt set_meta_stmt, get_meta_stmt;

  ~Impl() {
    // Statements must be finalized before close; Stmt members are
    // destroyed after this body, so close via sqlite3_close_v2 which
    // defers until the last statement is gone.
    if (db != nullptr) sqlite3_close_v2(db);
  }

  void exec_sql(const char* sql) {
    char* err = nullptr;
    if (sqlite3_exec(db, sql, nullptr, nullptr, &err) != SQLITE_OK) {
      std::string message = err != nullptr ? err : "unknown error";
      sqlite3_free(err);
      throw IoError("store: " + message);
    }
  }

  void prepare_all() {
    put_entity.prepare(db,
        "INSERT INTO entities(qid_num, qid, doc) VALUES(?1, ?2, ?3) "
        "ON CONFLICT(qid_num) DO UPDATE SET qid = excluded.qid, "
        "doc = excluded.doc");
    del_langs.prepare(db, "DELETE FROM entity_langs WHERE qid_num = ?1");
    del_classes.prepare(db, "DELETE FROM entity_classes WHERE qid_num = ?1");
    ins_lang.prepare(db,
        "INSERT OR IGNORE INTO entity_langs(lang, qid_num) VALUES(?1, ?2)");
    ins_class.prepare(db,
        "INSERT OR IGNORE INTO entity_classes(class, qid_num) VALUES(?1, ?2)");
    get_by_num.prepare(db, "SELECT doc FROM entities WHERE qid_num = ?1");
    count_entities.prepare(db, "SELECT COUNT(*) FROM entities");
    begin_txn.prepare(db, "BEGIN IMMEDIATE");
    commit_txn.prepare(db, "COMMIT");
    rollback_txn.prepare(db, "ROLLBACK");
    del_closure.prepare(db, "DELETE FROM closure_members");
    ins_closure.prepare(db,
        "INSERT OR REPLACE INTO closure_members(root, member) VALUES(?1, ?2)");
    scan_closure.prepare(db,
        "SELECT root, member FROM closure_members ORDER BY root, member");
    count_closure.prepare(db, "SELECT COUNT(*) FROM closure_members");
    set_meta_stmt.prepare(db,
        "INSERT OR REPLACE INTO meta(key, value) VALUES(?1, ?2)");
    get_meta_stmt.prepare(db, "SELECT value FROM meta WHERE key = ?1");
  }

  void put_locked(const CompactEntity& entity) {
    const std::int64_t num = static_cast<std::int64_t>(entity.qid_number());
    del_langs.bind(1, num);
    del_langs.exec(db);
    del_classes.bind(1, num);
    del_classes.exec(db);
    put_entity.bind(1, num).bind(2, entity.qid).bind(3, entity.to_json().dump());
    put_entity.exec(db);
    for (const auto& [lang, label] : entity.labels) {
      (void)label;
      ins_lang.bind(1, lang).bind(2, num);
      ins_lang.exec(db);
    }
    for (const std::string& cls : entity.instance_of) {
      ins_class.bind(1, cls).bind(2, num);
      ins_class.exec(db);
    }
  }

  // Runs `body` inside one transaction, rolling back on error.
  template <typename Fn>
  void transact(Fn&& body) {
    begin_txn.exec(db);
    try {
      body();
    } catch (...) {
      try {
        rollback_txn.exec(db);
      } catch (...) {
        // Original exception matters more than rollback failure.
      }
      throw;
    }
    commit_txn.exec(db);
  }
};

EntityStore::EntityStore(const std::filesystem::path& dir, OpenMode mode)
    : impl_(std::make_unique<Impl>()) {
  impl_->dir = dir;
  impl_->writable = mode == OpenMode::kReadWrite;
  std::error_code ec;
  if (impl_->writable) {
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("store: cannot create " + dir.string());
  }
  const std::filesystem::path db_path = dir / kDbFileName;
  if (!impl_->writable && !std::filesystem::exists(db_path)) {
    throw IoError("store: no database in " + dir.string());
  }
  const int flags = impl_->writable
                        ? SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE
                        : SQLITE_OPEN_READONLY;
  if (sqlite3_open_v2(db_path.string().c_str(), &impl_->db, flags, nullptr) !=
      SQLITE_OK) {
    const std::string message =
        impl_->db != nullptr ? sqlite3_errmsg(impl_->db) : "open failed";
    throw IoError("store: cannot open " + db_path.string() + ": " + message);
  }
  sqlite3_busy_timeout(impl_->db, 10000);
  if (impl_->writable) {
    impl_->exec_sql("PRAGMA journal_mode=WAL");
    impl_->exec_sql("PRAGMA synchronous=NORMAL");
    impl_->exec_sql(kSchema);
  }
  impl_->prepare_all();
  const auto version = get_meta("schema_version");
  if (!version.has_value()) {
    if (!impl_->writable) {
      throw DataError("store: missing schema version in " + dir.string());
    }
    set_meta("schema_version", kSchemaVersion);
  } else if (*version != kSchemaVersion) {
    throw DataError("store: unsupported schema version " + *version);
  }
}

EntityStore::~EntityStore() = default;
EntityStore::EntityStore(EntityStore&&) noexcept = default;
EntityStore& EntityStore::operator=(EntityStore&&) noexcept = default;

bool EntityStore::exists(const std::filesystem::path& dir) {
  return std::filesystem::exists(dir / kDbFileName);
}

void EntityStore::put(const CompactEntity& entity) {
  impl_->transact([&] { impl_->put_locked(entity); });
}

void EntityStore::put_batch(const std::vector<CompactEntity>& batch) {
  impl_->transact([&] {
    for (const CompactEntity& entity : batch) impl_->put_locked(entity);
  });
}

std::optional<CompactEntity> EntityStore::get(std::string_view qid) const {
  if (!is_valid_qid(qid)) return std::nullopt;
  CompactEntity probe;
  probe.qid = std::string(qid);
  const std::int64_t num = static_cast<std::int64_t>(probe.qid_number());
  Stmt& stmt = impl_->get_by_num;
  stmt.bind(1, num);
  if (!stmt.row(impl_->db)) return std::nullopt;
  CompactEntity entity = CompactEntity::from_json_line(stmt.column_text(0));
  stmt.reset();
  return entity;
}

std::uint64_t EntityStore::entity_count() const {
  Stmt& stmt = impl_->count_entities;
  if (!stmt.row(impl_->db)) return 0;
  const auto n = static_cast<std::uint64_t>(stmt.column_int64(0));
  stmt.reset();
  return n;
}

void EntityStore::for_each(const Visitor& visit) const {
  // Scans prepare their own statement so a visitor may issue further
  // store queries without clobbering the iteration.
  Stmt stmt(impl_->db, "SELECT doc FROM entities ORDER BY qid_num");
  while (stmt.row(impl_->db)) {
    if (!visit(CompactEntity::from_json_line(stmt.column_text(0)))) {
      stmt.reset();
      return;
    }
  }
}

void EntityStore::for_each_in_language(std::string_view lang,
                                       const Visitor& visit) const {
  Stmt stmt(impl_->db,
            "SELECT e.doc FROM entity_langs l "
            "JOIN entities e ON e.qid_num = l.qid_num "
            "WHERE l.lang = ?1 ORDER BY l.qid_num");
  stmt.bind(1, lang);
  while (stmt.row(impl_->db)) {
    if (!visit(CompactEntity::from_json_line(stmt.column_text(0)))) {
      stmt.reset();
      return;
    }
  }
}

void EntityStore::for_each_instance_of(const std::set<std::string>& classes,
                                       const Visitor& visit) const {
  // The class list is tiny (typically a few thousand closure members at
  // most); binding via a temp table keeps the statement cacheable.
  impl_->exec_sql(
      "CREATE TEMP TABLE IF NOT EXISTS query_classes("
      "class TEXT PRIMARY KEY) WITHOUT ROWID");
  impl_->exec_sql("DELETE FROM query_classes");
  {
    Stmt ins(impl_->db, "INSERT OR IGNORE INTO query_classes(class) VALUES(?1)");
    Stmt begin(impl_->db, "BEGIN");
    Stmt commit(impl_->db, "COMMIT");
    begin.exec(impl_->db);
    for (const std::string& cls : classes) {
      ins.bind(1, cls);
      ins.exec(impl_->db);
    }
    commit.exec(impl_->db);
  }
  Stmt scan(impl_->db,
            "SELECT DISTINCT e.qid_num, e.doc FROM entity_classes c "
            "JOIN query_classes q ON q.class = c.class "
            "JOIN entities e ON e.qid_num = c.qid_num "
            "ORDER BY e.qid_num");
  while (scan.row(impl_->db)) {
    if (!visit(CompactEntity::from_json_line(scan.column_text(1)))) {
      scan.reset();
      return;
    }
  }
}

void EntityStore::export_jsonl(std::ostream& out) const {
  for_each([&out](const CompactEntity& entity) {
    out << entity.to_json_line() << '\n';
    return out.good();
  });
  if (!out.good()) throw IoError("store: export stream failure");
}

void EntityStore::replace_closure(
    const std::map<std::string, std::vector<std::string>>& closure) {
  impl_->transact([&] {
    impl_->del_closure.exec(impl_->db);
    for (const auto& [root, members] : closure) {
      for (const std::string& member : members) {
        impl_->ins_closure.bind(1, root).bind(2, member);
        impl_->ins_closure.exec(impl_->db);
      }
    }
  });
}

std::map<std::string, std::vector<std::string>> EntityStore::load_closure()
    const {
  std::map<std::string, std::vector<std::string>> closure;
  Stmt& stmt = impl_->scan_closure;
  while (stmt.row(impl_->db)) {
    closure[std::string(stmt.column_text(0))].emplace_back(stmt.column_text(1));
  }
  return closure;
}

bool EntityStore::has_closure() const {
  Stmt& stmt = impl_->count_closure;
  if (!stmt.row(impl_->db)) return false;
  const bool any = stmt.column_int64(0) > 0;
  stmt.reset();
  return any;
}

void EntityStore::set_meta(std::string_view key, std::string_view value) {
  impl_->set_meta_stmt.bind(1, key).bind(2, value);
  impl_->set_meta_stmt.exec(impl_->db);
}

std::optional<std::string> EntityStore::get_meta(std::string_view key) const {
  Stmt& stmt = impl_->get_meta_stmt;
  stmt.bind(1, key);
  if (!stmt.row(impl_->db)) return std::nullopt;
  std::string value(stmt.column_text(0));
  stmt.reset();
  return value;
}

const std::filesystem::path& EntityStore::directory() const {
  return impl_->dir;
}

}  // namespace wikinames

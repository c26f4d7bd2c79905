#include "hangwire/serialize.hpp"

namespace hangwire {

Json to_json(const Verdict& v) {
  Json j;
  j["ok"] = v.ok;
  j["mode"] = v.mode == CheckMode::full ? "full" : "essential";
  if (!v.ok) {
    j["counterexample"] = v.counterexample.to_vector();
    j["expected"] = v.expected_fall ? "fall" : "hang";
    j["got"] = format_word(v.got);
  }
  return j;
}

Json to_json(const ConstructionReport& r) {
  Json j;
  j["method"] = r.method;
  j["k"] = r.k;
  j["n"] = r.n;
  j["word"] = format_word(r.word);
  j["letters"] = r.word.letters();
  j["unreduced"] = r.unreduced;
  j["reduced"] = r.reduced;
  j["verdict"] = r.verdict ? to_json(*r.verdict) : Json(nullptr);
  return j;
}

Json to_json(const SearchOutcome& o) {
  Json j;
  j["spec"] = o.spec;
  j["length"] = o.length;
  Json sols = Json::array();
  for (const auto& s : o.solutions) sols.push_back(format_word(s.word));
  j["solutions"] = sols;
  j["nodes"] = o.nodes;
  j["seconds"] = o.seconds;
  j["sharding"] = Json{{"shards", o.shards}, {"shard_id", o.shard_id}};
  if (o.aborted) j["aborted"] = o.abort_reason;
  return j;
}

Json to_json(const MinimumOutcome& o) {
  Json j;
  j["spec"] = o.spec;
  if (o.found)
    j["min_length"] = o.min_length;
  else
    j["searched_up_to"] = o.searched_up_to;
  Json sols = Json::array();
  for (const auto& s : o.solutions) sols.push_back(format_word(s.word));
  j["solutions"] = sols;
  j["nodes"] = o.nodes;
  j["seconds"] = o.seconds;
  if (o.aborted) j["aborted"] = o.abort_reason;
  return j;
}

Json to_json(const std::vector<LengthTableRow>& rows, int k) {
  Json j;
  j["k"] = k;
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["i"] = row.i;
    r["n"] = row.n;
    r["length"] = row.length;
    if (row.ratio) r["ratio"] = *row.ratio;
    arr.push_back(r);
  }
  j["rows"] = arr;
  return j;
}

}  // namespace hangwire

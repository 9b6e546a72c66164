#include "mps/ring.hpp"

#include <algorithm>
#include <set>

namespace mps {

RingPtr Ring::make(FieldPtr field, std::vector<std::string> vars, MonomialOrder order) {
  if (vars.empty()) throw Error("BadRing", "ring needs at least one variable");
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size()) throw Error("BadRing", "duplicate variable names");
  if (field->kind() == Field::Kind::FunctionField) {
    for (const auto& p : field->params())
      if (seen.count(p))
        throw Error("BadRing", "variable '" + p + "' collides with a field parameter");
  }
  if (order.kind == MonomialOrder::Kind::Block) {
    std::vector<int> all;
    for (const auto& g : order.blocks) all.insert(all.end(), g.begin(), g.end());
    std::vector<int> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> want(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) want[i] = static_cast<int>(i);
    if (sorted != want) throw Error("BadRing", "block order must partition the variables");
  }
  auto r = std::shared_ptr<Ring>(new Ring());
  r->field_ = std::move(field);
  r->vars_ = std::move(vars);
  r->order_ = std::move(order);
  return r;
}

int Ring::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool Ring::same(const Ring& o) const {
  return field_->same(*o.field_) && vars_ == o.vars_ && order_ == o.order_;
}

RingPtr Ring::with_order(MonomialOrder order) const {
  return make(field_, vars_, std::move(order));
}

RingPtr Ring::with_elim_order(const std::vector<std::string>& front) const {
  std::vector<int> lead, rest;
  std::set<int> lead_set;
  for (const auto& n : front) {
    int i = var_index(n);
    if (i < 0) throw Error("BadRing", "unknown variable '" + n + "' in elimination block");
    lead.push_back(i);
    lead_set.insert(i);
  }
  for (int i = 0; i < nvars(); ++i)
    if (!lead_set.count(i)) rest.push_back(i);
  if (lead.empty() || rest.empty())
    return with_order(MonomialOrder::grevlex());
  return with_order(MonomialOrder::block({lead, rest}, MonomialOrder::Kind::GrevLex));
}

RingPtr Ring::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> vs = vars_;
  vs.insert(vs.end(), extra.begin(), extra.end());
  return make(field_, std::move(vs), MonomialOrder::grevlex());
}

}  // namespace mps

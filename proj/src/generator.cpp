#include "ortree/generator.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ortree {

LevelGenerator::LevelGenerator(std::size_t level,
                               std::unique_ptr<LevelGenerator> source,
                               std::shared_ptr<const GeneratorOptions> options)
    : level_(level), source_(std::move(source)), options_(std::move(options)) {
  if (level_ == 0) throw std::invalid_argument("level must be positive");
  if ((level_ == 1) != (source_ == nullptr))
    throw std::invalid_argument("only level 1 has no source");
}

bool LevelGenerator::advance() {
  int leftmost = next_leftmost_;
  if (!started_) {
    started_ = true;
    const OrderedTree* first = source_->next();
    if (first == nullptr) return false;
    current_ = *first;
    leftmost = 1;
  } else {
    if (!lookahead_) {
      current_.reset();
      return false;
    }
    current_ = std::move(lookahead_);
  }
  lookahead_.reset();
  if (const OrderedTree* ahead = source_->next()) lookahead_ = *ahead;

  const StepPlan plan =
      lookahead_ ? plan_step(*current_, *lookahead_, leftmost,
                             {options_->checked, options_->histogram})
                 : plan_last(*current_, leftmost, options_->histogram);
  next_leftmost_ = plan.next_leftmost;
  if (options_->on_plan) options_->on_plan(*current_, plan);
  pending_.assign(plan.order.rbegin(), plan.order.rend());
  return true;
}

const OrderedTree* LevelGenerator::next() {
  if (done_) return nullptr;
  if (level_ == 1) {
    if (started_) {
      done_ = true;
      emitted_.reset();
      return nullptr;
    }
    started_ = true;
    emitted_ = OrderedTree::trivial();
  } else {
    if (pending_.empty() && !advance()) {
      done_ = true;
      emitted_.reset();
      return nullptr;
    }
    const int j = pending_.back();
    pending_.pop_back();
    emitted_ = child(*current_, j);
  }
  if (options_->on_emit) options_->on_emit(level_, *emitted_);
  return &*emitted_;
}

GrayCode::GrayCode(std::size_t n, GeneratorOptions options)
    : n_(n), high_water_(n, 0), scratch_(n, 0) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  auto shared = std::make_shared<const GeneratorOptions>(std::move(options));
  for (std::size_t level = 1; level <= n; ++level)
    top_ = std::make_unique<LevelGenerator>(level, std::move(top_), shared);
}

const OrderedTree* GrayCode::next() {
  const OrderedTree* tree = top_->next();
  if (tree != nullptr) ++emitted_;
  record_live();
  return tree;
}

void GrayCode::record_live() {
  std::fill(scratch_.begin(), scratch_.end(), 0);
  for (const LevelGenerator* g = top_.get(); g != nullptr; g = g->source()) {
    scratch_[g->level() - 1] += g->held_emitted();
    if (g->level() >= 2) scratch_[g->level() - 2] += g->held_parents();
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    high_water_[i] = std::max(high_water_[i], scratch_[i]);
    total += scratch_[i];
  }
  max_total_ = std::max(max_total_, total);
}

std::size_t GrayCode::max_live_per_level() const {
  return *std::max_element(high_water_.begin(), high_water_.end());
}

DeltaStream::DeltaStream(std::size_t n, GeneratorOptions options)
    : code_(n, std::move(options)) {
  first_ = *code_.next();
  previous_ = first_;
}

std::optional<Delta> DeltaStream::next() {
  const OrderedTree* tree = code_.next();
  if (tree == nullptr) return std::nullopt;
  const Delta d = delta(*previous_, *tree);
  previous_ = *tree;
  return d;
}

std::vector<OrderedTree> gray_code(std::size_t n, GeneratorOptions options) {
  GrayCode code(n, std::move(options));
  std::vector<OrderedTree> out;
  for (const OrderedTree& tree : code) out.push_back(tree);
  return out;
}

std::vector<Delta> delta_stream(std::size_t n, GeneratorOptions options) {
  DeltaStream stream(n, std::move(options));
  std::vector<Delta> out;
  while (auto d = stream.next()) out.push_back(*d);
  return out;
}

std::size_t FamilyTree::node_count() const {
  std::size_t count = 0;
  for (const auto& level : levels) count += level.size();
  return count;
}

FamilyTree build_family_tree(std::size_t n, std::size_t cap, GeneratorOptions options) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (n > cap) throw CapExceeded(n, cap);

  FamilyTree family;
  family.n = n;
  family.levels.resize(n);
  auto user_emit = std::move(options.on_emit);
  options.on_emit = [&](std::size_t level, const OrderedTree& tree) {
    family.levels[level - 1].push_back(FamilyNode{tree, 0, {}});
    if (user_emit) user_emit(level, tree);
  };
  GrayCode code(n, std::move(options));
  while (code.next() != nullptr) {
  }

  for (std::size_t k = 1; k < n; ++k) {
    auto& parents = family.levels[k - 1];
    std::unordered_map<OrderedTree, std::size_t> index;
    index.reserve(parents.size());
    for (std::size_t i = 0; i < parents.size(); ++i) index.emplace(parents[i].tree, i);
    auto& children = family.levels[k];
    for (std::size_t c = 0; c < children.size(); ++c) {
      const std::size_t p = index.at(parent(children[c].tree));
      children[c].parent = p;
      parents[p].children.push_back(c);
    }
  }
  return family;
}

std::string export_dot(const FamilyTree& family) {
  std::ostringstream out;
  out << "digraph family_tree {\n"
      << "  graph [ordering=out];\n"
      << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t k = 0; k < family.levels.size(); ++k) {
    out << "  subgraph level_" << (k + 1) << " {\n    rank=same;\n";
    for (const auto& node : family.levels[k])
      out << "    \"" << encode_parens(node.tree) << "\" [label=\""
          << encode_levels(node.tree) << "\"];\n";
    out << "  }\n";
  }
  for (std::size_t k = 0; k + 1 < family.levels.size(); ++k) {
    for (const auto& node : family.levels[k]) {
      const auto from = encode_parens(node.tree);
      for (const std::size_t c : node.children)
        out << "  \"" << from << "\" -> \""
            << encode_parens(family.levels[k + 1][c].tree) << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ortree

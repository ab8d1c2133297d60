#include "grandforest/biject.hpp"

#include <utility>

namespace grandforest {

namespace {

void append_tree(const Tree& t, StepWord& out) {
  for (const auto& child : t.children) {
    out.push_back(Step::Up);
    append_tree(child, out);
    out.push_back(Step::Down);
  }
}

StepWord reflected(const StepWord& steps) {
  StepWord out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(reflect(s));
  return out;
}

}  // namespace

DyckPath tree_to_dyck(const Tree& t) {
  StepWord steps;
  steps.reserve(2 * tree_edges(t));
  append_tree(t, steps);
  return DyckPath(std::move(steps));
}

Tree dyck_to_tree(const DyckPath& p) {
  // stack.back() is the node currently being filled; stack[0] is the root.
  std::vector<Tree> stack(1);
  for (Step s : p.steps()) {
    if (s == Step::Up) {
      stack.emplace_back();
    } else {
      Tree done = std::move(stack.back());
      stack.pop_back();
      stack.back().children.push_back(std::move(done));
    }
  }
  return std::move(stack.front());
}

GrandDyckPath mirror(const GrandDyckPath& p) { return GrandDyckPath(reflected(p.steps())); }

std::vector<SignedSegment> decompose_crossings(const GrandDyckPath& p) {
  std::vector<SignedSegment> segments;
  const StepWord& steps = p.steps();

  StepWord run;
  Side run_side = Side::Above;
  std::int64_t level = 0;
  std::size_t arch_start = 0;

  auto flush = [&] {
    if (run.empty()) return;
    segments.push_back({run_side, DyckPath(std::move(run))});
    run.clear();
  };

  for (std::size_t i = 0; i < steps.size(); ++i) {
    level += steps[i] == Step::Up ? 1 : -1;
    if (level != 0) continue;

    const Side side = steps[arch_start] == Step::Up ? Side::Above : Side::Below;
    if (side != run_side) flush();
    run_side = side;
    for (std::size_t j = arch_start; j <= i; ++j) {
      run.push_back(side == Side::Above ? steps[j] : reflect(steps[j]));
    }
    arch_start = i + 1;
  }
  flush();
  return segments;
}

GrandDyckPath recompose(const std::vector<SignedSegment>& segments) {
  StepWord steps;
  for (const auto& seg : segments) {
    for (Step s : seg.path.steps()) steps.push_back(seg.side == Side::Above ? s : reflect(s));
  }
  return GrandDyckPath(std::move(steps));
}

CanonicalGrandDyck CanonicalGrandDyck::canonicalize(const GrandDyckPath& p) {
  if (!p.empty() && p.steps().front() == Step::Down) return CanonicalGrandDyck(mirror(p));
  return CanonicalGrandDyck(p);
}

CanonicalGrandDyck forest_to_grand_dyck(const Forest& f) {
  std::vector<SignedSegment> segments;
  segments.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    segments.push_back({i % 2 == 0 ? Side::Above : Side::Below, tree_to_dyck(f.trees()[i])});
  }
  return CanonicalGrandDyck::canonicalize(recompose(segments));
}

Forest grand_dyck_to_forest(const GrandDyckPath& p) {
  std::vector<Tree> trees;
  for (const auto& seg : decompose_crossings(p)) trees.push_back(dyck_to_tree(seg.path));
  return Forest(std::move(trees));
}

}  // namespace grandforest

#pragma once
// Elementary moves on train tracks. A split replaces a large branch by one of
// the three lower configurations of the splitting figure; a shift slides a
// spur past an adjacent one along the line they share. Every move returns the
// new track together with a route map carrying it back over the input.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bicorn/common.hpp"
#include "bicorn/traintrack.hpp"

namespace bicorn {

enum class SplitChoice { left, right, central };

inline const char* split_choice_name(SplitChoice c) {
  switch (c) {
    case SplitChoice::left: return "left";
    case SplitChoice::right: return "right";
    case SplitChoice::central: return "central";
  }
  return "?";
}

struct MoveResult {
  TrainTrack track;
  RouteMap onto_input;
};

namespace detail {

// token sits alone on its side of a trivalent switch
inline bool lone_trivalent_end(const TrainTrack& t, const TrackIndex& ix, int tok) {
  const EndSeat& at = ix.seat[tok];
  const TrackSwitch& sw = t.switches[at.sw];
  return sw.side[at.side].size() == 1 && sw.side[1 - at.side].size() == 2;
}

// dart of branch e leaving switch from (e joins exactly the two local switches)
inline int connector_dart(const TrackIndex& ix, int e, int from) {
  return branch_dart(e, ix.seat[end_token(e, 0)].sw == from ? 0 : 1);
}

// routes for branches that keep their identity: a moved end stretches the
// route over the connector toward its new switch
inline std::vector<std::vector<int>> reroute_kept(
    const TrainTrack& t, const TrackIndex& ix, int connector,
    const std::map<int, std::pair<int, int>>& moved) {
  std::vector<std::vector<int>> routes(t.branch_count);
  for (int b = 0; b < t.branch_count; ++b) {
    if (b == connector) continue;  // replaced by the move
    std::vector<int>& r = routes[b];
    auto it0 = moved.find(end_token(b, 0));
    if (it0 != moved.end()) r.push_back(connector_dart(ix, connector, it0->second.second));
    r.push_back(branch_dart(b, 0));
    auto it1 = moved.find(end_token(b, 1));
    if (it1 != moved.end()) r.push_back(connector_dart(ix, connector, it1->second.first));
  }
  return routes;
}

}  // namespace detail

// The top configuration: e runs between two trivalent switches and is alone
// on its side at both ends. Counterclockwise past each end the far side reads
// [A, B] at the tail switch and [D, C] at the head switch, cusps facing each
// other along e.
inline MoveResult split(const TrainTrack& t, int large_branch, SplitChoice choice) {
  TrackIndex ix = build_track_index(t);
  require(large_branch >= 0 && large_branch < t.branch_count, errc::not_large_branch,
          "no such branch");
  int e = large_branch;
  int u = ix.seat[end_token(e, 0)].sw;
  int v = ix.seat[end_token(e, 1)].sw;
  require(u != v && detail::lone_trivalent_end(t, ix, end_token(e, 0)) &&
              detail::lone_trivalent_end(t, ix, end_token(e, 1)),
          errc::not_large_branch,
          "branch " + std::to_string(e) + " does not match the top configuration");
  const std::vector<int>& far_u = t.switches[u].side[1 - ix.seat[end_token(e, 0)].side];
  const std::vector<int>& far_v = t.switches[v].side[1 - ix.seat[end_token(e, 1)].side];
  int tok_a = far_u[0], tok_b = far_u[1];
  int tok_d = far_v[0], tok_c = far_v[1];

  if (choice != SplitChoice::central) {
    bool right = choice == SplitChoice::right;
    TrainTrack out;
    out.genus = t.genus;
    out.branch_count = t.branch_count;
    out.switches = t.switches;
    // f reuses the slot of e; its route runs the old branch tail to head
    int f0 = end_token(e, 0), f1 = end_token(e, 1);
    std::map<int, std::pair<int, int>> moved;
    if (right) {
      out.switches[u].side[0] = {tok_a};
      out.switches[u].side[1] = {f0, tok_c};
      out.switches[v].side[0] = {tok_d};
      out.switches[v].side[1] = {f1, tok_b};
      moved[tok_b] = {u, v};
      moved[tok_c] = {v, u};
    } else {
      out.switches[u].side[0] = {tok_b};
      out.switches[u].side[1] = {tok_d, f0};
      out.switches[v].side[0] = {tok_c};
      out.switches[v].side[1] = {tok_a, f1};
      moved[tok_a] = {u, v};
      moved[tok_d] = {v, u};
    }
    RouteMap m;
    m.switch_image.resize(t.switches.size());
    std::iota(m.switch_image.begin(), m.switch_image.end(), 0);
    m.branch_route = detail::reroute_kept(t, ix, e, moved);
    m.branch_route[e] = {detail::connector_dart(ix, e, u)};  // f rides over e
    try {
      validate_track(out);
    } catch (const error& err) {
      fail(errc::invalid_result, std::string("split output fails validation: ") + err.what());
    }
    return MoveResult{std::move(out), std::move(m)};
  }

  // central split: e is erased, A joins C and B joins D through its place
  std::map<int, int> joint = {{tok_a, tok_c}, {tok_c, tok_a}, {tok_b, tok_d}, {tok_d, tok_b}};
  std::vector<char> consumed(t.branch_count, 0);
  consumed[e] = 1;

  struct Chain {
    int head_tok, tail_tok;       // terminal tokens kept as seats
    std::vector<int> route;       // input darts from head to tail
    std::vector<int> members;
  };
  std::vector<Chain> chains;
  std::vector<int> terminals;
  for (int b = 0; b < t.branch_count; ++b)
    for (int w = 0; w < 2; ++w) {
      int tok = end_token(b, w);
      if (b != e && !joint.count(tok) && joint.count(end_token(b, 1 - w)))
        terminals.push_back(tok);
    }
  // a branch with both ends jointed sits inside a chain or a closed circle
  std::sort(terminals.begin(), terminals.end());
  std::set<int> used_terminal;
  for (int start : terminals) {
    if (used_terminal.count(start)) continue;
    Chain ch;
    ch.head_tok = start;
    int tok = start;
    for (;;) {
      int b = end_branch(tok);
      consumed[b] = 1;
      ch.members.push_back(b);
      ch.route.push_back(branch_dart(b, end_which(tok) == 0 ? 0 : 1));
      int other = end_token(b, 1 - end_which(tok));
      auto it = joint.find(other);
      if (it == joint.end()) {
        ch.tail_tok = other;
        break;
      }
      ch.route.push_back(
          detail::connector_dart(ix, e, ix.seat[it->first].sw));
      tok = it->second;
    }
    used_terminal.insert(ch.head_tok);
    used_terminal.insert(ch.tail_tok);
    chains.push_back(std::move(ch));
  }
  for (const auto& jk : joint)
    require(consumed[end_branch(jk.first)], errc::invalid_result,
            "central split closes a circle with no switch");

  // compact switches (dropping the two local ones) and branches
  std::vector<int> sw_new(t.switches.size(), -1);
  std::vector<int> sw_image;
  for (int s = 0; s < (int)t.switches.size(); ++s) {
    if (s == u || s == v) continue;
    sw_new[s] = (int)sw_image.size();
    sw_image.push_back(s);
  }
  require(!sw_image.empty(), errc::invalid_result, "central split erases every switch");
  std::vector<int> branch_new(t.branch_count, -1);
  int next = 0;
  for (int b = 0; b < t.branch_count; ++b)
    if (!consumed[b]) branch_new[b] = next++;
  std::map<int, int> seat_token;  // old terminal token -> new token
  std::vector<std::vector<int>> chain_routes;
  for (Chain& ch : chains) {
    seat_token[ch.head_tok] = end_token(next, 0);
    seat_token[ch.tail_tok] = end_token(next, 1);
    chain_routes.push_back(ch.route);
    ++next;
  }

  TrainTrack out;
  out.genus = t.genus;
  out.branch_count = next;
  for (int s = 0; s < (int)t.switches.size(); ++s) {
    if (sw_new[s] < 0) continue;
    TrackSwitch sw;
    for (int j = 0; j < 2; ++j)
      for (int tok : t.switches[s].side[j]) {
        auto it = seat_token.find(tok);
        if (it != seat_token.end())
          sw.side[j].push_back(it->second);
        else
          sw.side[j].push_back(end_token(branch_new[end_branch(tok)], end_which(tok)));
      }
    out.switches.push_back(std::move(sw));
  }

  RouteMap m;
  m.switch_image = sw_image;
  m.branch_route.resize(next);
  for (int b = 0; b < t.branch_count; ++b)
    if (branch_new[b] >= 0) m.branch_route[branch_new[b]] = {branch_dart(b, 0)};
  for (size_t k = 0; k < chains.size(); ++k)
    m.branch_route[next - (int)chains.size() + (int)k] = chain_routes[k];
  try {
    validate_track(out);
  } catch (const error& err) {
    fail(errc::invalid_result, std::string("central split output fails validation: ") + err.what());
  }
  return MoveResult{std::move(out), std::move(m)};
}

// Shift along m: one end alone at a trivalent switch against [p, W], the
// other sharing its side with a single spur q across from a lone E. The two
// merge points along the line trade places; every route lands on the switch
// the line keeps.
inline MoveResult shift(const TrainTrack& t, int branch) {
  TrackIndex ix = build_track_index(t);
  require(branch >= 0 && branch < t.branch_count, errc::pattern_mismatch, "no such branch");
  int m = branch;
  int lone = -1, shared = -1;
  for (int w = 0; w < 2; ++w) {
    int tok = end_token(m, w);
    const EndSeat& at = ix.seat[tok];
    const TrackSwitch& sw = t.switches[at.sw];
    if (sw.side[at.side].size() == 1 && sw.side[1 - at.side].size() == 2)
      lone = lone < 0 ? w : -2;
    else if (sw.side[at.side].size() == 2 && sw.side[1 - at.side].size() == 1)
      shared = shared < 0 ? w : -2;
  }
  require(lone >= 0 && shared >= 0, errc::pattern_mismatch,
          "branch " + std::to_string(m) + " does not match the shift figure");
  int s1 = ix.seat[end_token(m, lone)].sw;
  int s2 = ix.seat[end_token(m, shared)].sw;
  require(s1 != s2, errc::pattern_mismatch, "shift needs two distinct switches");
  const EndSeat& lone_at = ix.seat[end_token(m, lone)];
  const EndSeat& shared_at = ix.seat[end_token(m, shared)];
  const std::vector<int>& far1 = t.switches[s1].side[1 - lone_at.side];
  const std::vector<int>& mside = t.switches[s2].side[shared_at.side];
  int tok_e = t.switches[s2].side[1 - shared_at.side][0];
  int tok_p = far1[0], tok_w = far1[1];
  int tok_q = mside[shared_at.pos == 0 ? 1 : 0];

  int m0 = end_token(m, 0), m1 = end_token(m, 1);
  TrainTrack out;
  out.genus = t.genus;
  out.branch_count = t.branch_count;
  out.switches = t.switches;
  if (shared_at.pos == 0) {
    // stack p, W, q: the lower pair W, q meets first after the move
    out.switches[s1].side[0] = {m0};
    out.switches[s1].side[1] = {tok_w, tok_q};
    out.switches[s2].side[0] = {tok_e};
    out.switches[s2].side[1] = {tok_p, m1};
  } else {
    // stack q, p, W: the upper pair q, p meets first
    out.switches[s1].side[0] = {m0};
    out.switches[s1].side[1] = {tok_q, tok_p};
    out.switches[s2].side[0] = {tok_e};
    out.switches[s2].side[1] = {m1, tok_w};
  }

  std::map<int, std::pair<int, int>> moved;
  moved[tok_p] = {s1, s2};
  moved[tok_w] = {s1, s2};
  RouteMap rm;
  rm.switch_image.resize(t.switches.size());
  std::iota(rm.switch_image.begin(), rm.switch_image.end(), 0);
  rm.switch_image[s1] = s2;
  rm.branch_route = detail::reroute_kept(t, ix, m, moved);
  rm.branch_route[m] = {};  // the new middle branch collapses onto the switch
  validate_track(out);
  return MoveResult{std::move(out), std::move(rm)};
}

struct CarrySearch {
  bool found = false;
  bool budget_exhausted = false;
  int depth_reached = 0;
  std::vector<std::string> moves;
};

// Breadth-first over split and shift images of tau, matching sigma up to
// relabeling. The step budget bounds node expansions so callers can keep the
// fallback interruptible.
inline CarrySearch carried_within_budget(const TrainTrack& sigma, const TrainTrack& tau,
                                         int max_depth = 6, long long step_budget = 4096) {
  std::string goal = canonical_track_form(sigma);
  struct Node {
    TrainTrack track;
    int depth;
    std::vector<std::string> moves;
  };
  CarrySearch res;
  std::vector<Node> queue = {Node{tau, 0, {}}};
  std::set<std::string> seen = {canonical_track_form(tau)};
  if (seen.count(goal)) {
    res.found = true;
    return res;
  }
  size_t at = 0;
  long long steps = 0;
  while (at < queue.size()) {
    Node node = queue[at++];
    res.depth_reached = std::max(res.depth_reached, node.depth);
    if (node.depth == max_depth) continue;
    if (++steps > step_budget) {
      res.budget_exhausted = true;
      return res;
    }
    for (int b = 0; b < node.track.branch_count; ++b) {
      std::vector<std::pair<std::string, TrainTrack>> nexts;
      for (SplitChoice c : {SplitChoice::left, SplitChoice::right, SplitChoice::central}) {
        try {
          MoveResult mv = split(node.track, b, c);
          nexts.emplace_back(
              "split " + std::to_string(b) + " " + split_choice_name(c), std::move(mv.track));
        } catch (const error&) {
        }
      }
      try {
        MoveResult mv = shift(node.track, b);
        nexts.emplace_back("shift " + std::to_string(b), std::move(mv.track));
      } catch (const error&) {
      }
      for (auto& [name, track] : nexts) {
        std::string form = canonical_track_form(track);
        if (!seen.insert(form).second) continue;
        std::vector<std::string> moves = node.moves;
        moves.push_back(name);
        if (form == goal) {
          res.found = true;
          res.depth_reached = node.depth + 1;
          res.moves = std::move(moves);
          return res;
        }
        queue.push_back(Node{std::move(track), node.depth + 1, std::move(moves)});
      }
    }
  }
  return res;
}

}  // namespace bicorn

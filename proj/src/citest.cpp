#include "gas/citest.hpp"

#include <stdexcept>

namespace gas {

CiQuery CiQuery::canonical(NodeId a, NodeId b, const NodeSet& cond) {
    if (a == b) throw std::invalid_argument("CiQuery: identical endpoints");
    CiQuery q;
    q.u = std::min(a, b);
    q.v = std::max(a, b);
    q.cond = cond;
    q.cond.erase(a);
    q.cond.erase(b);
    return q;
}

bool CiTester::independent(NodeId a, NodeId b, const NodeSet& cond) {
    const CiQuery q = CiQuery::canonical(a, b, cond);
    ++stats_.total_calls;
    auto it = memo_.find(q);
    if (it != memo_.end()) return it->second;
    const bool answer = evaluate(q);
    memo_.emplace(q, answer);
    ++stats_.distinct_queries;
    stats_.query_log.push_back(q);
    return answer;
}

}  // namespace gas

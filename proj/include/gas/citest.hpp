#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "gas/dag.hpp"
#include "gas/dsep.hpp"
#include "gas/node_set.hpp"

namespace gas {

/// Canonical conditional-independence query: u < v and the conditioning
/// set excludes both endpoints. Symmetric and overlap-reduced queries
/// therefore collapse to one key.
struct CiQuery {
    NodeId u = 0;
    NodeId v = 0;
    NodeSet cond;

    static CiQuery canonical(NodeId a, NodeId b, const NodeSet& cond);

    friend bool operator==(const CiQuery&, const CiQuery&) = default;
    friend std::strong_ordering operator<=>(const CiQuery&, const CiQuery&) = default;
};

struct CiStats {
    long long distinct_queries = 0;
    long long total_calls = 0;
    std::vector<CiQuery> query_log;  // distinct queries, in first-asked order
};

/// Pluggable conditional-independence backend. Answers are memoized per
/// canonical query, so repeated identical queries are free, return the
/// identical answer, and are counted once in distinct_queries.
class CiTester {
  public:
    virtual ~CiTester() = default;

    bool independent(NodeId a, NodeId b, const NodeSet& cond);

    const CiStats& stats() const { return stats_; }

  protected:
    virtual bool evaluate(const CiQuery& query) = 0;

  private:
    std::map<CiQuery, bool> memo_;
    CiStats stats_;
};

/// Exact oracle: independence is d-separation in the ground-truth DAG.
class OracleTester : public CiTester {
  public:
    explicit OracleTester(Dag dag) : dag_(std::move(dag)) {}

    const Dag& dag() const { return dag_; }

  protected:
    bool evaluate(const CiQuery& query) override {
        return d_separated(dag_, NodeSet{query.u}, NodeSet{query.v}, query.cond);
    }

  private:
    Dag dag_;
};

/// Oracle with injected extra independencies: queries in the injected set
/// are answered independent regardless of d-separation, modelling a
/// distribution that is Markov but not faithful to the DAG.
class UnfaithfulOracleTester : public CiTester {
  public:
    UnfaithfulOracleTester(Dag dag, std::set<CiQuery> extra_independencies)
        : dag_(std::move(dag)), extra_(std::move(extra_independencies)) {}

  protected:
    bool evaluate(const CiQuery& query) override {
        if (extra_.count(query) > 0) return true;
        return d_separated(dag_, NodeSet{query.u}, NodeSet{query.v}, query.cond);
    }

  private:
    Dag dag_;
    std::set<CiQuery> extra_;
};

}  // namespace gas

#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>

#include "mbseg/igtree.hpp"
#include "mbseg/instance_base.hpp"
#include "mbseg/mbl.hpp"

namespace mbseg {

// A trained classifier bound to a window schema. Immutable; concurrent
// prediction is safe.
class Model {
 public:
  virtual ~Model() = default;

  virtual Algorithm algorithm() const = 0;
  virtual const Schema& schema() const = 0;
  virtual const ClassDistribution& class_totals() const = 0;
  virtual Label predict(SymbolView features) const = 0;
  virtual void save(std::ostream& out) const = 0;
};

// IB1 / IB1-IG: the full instance base plus a weight vector.
class MblModel final : public Model {
 public:
  MblModel(InstanceBase base, Algorithm algo);
  MblModel(InstanceBase base, Algorithm algo, FeatureWeights weights);

  Algorithm algorithm() const override { return algo_; }
  const Schema& schema() const override { return base_.schema(); }
  const ClassDistribution& class_totals() const override { return base_.class_totals(); }
  Label predict(SymbolView features) const override;
  void save(std::ostream& out) const override;

  Classification classify_full(SymbolView features) const;
  const InstanceBase& base() const { return base_; }
  const FeatureWeights& weights() const { return weights_; }

 private:
  InstanceBase base_;
  Algorithm algo_;
  FeatureWeights weights_;
};

class IgTreeModel final : public Model {
 public:
  IgTreeModel(Schema schema, IgTree tree, ClassDistribution class_totals,
              std::uint64_t source_unique_vectors);

  Algorithm algorithm() const override { return Algorithm::igtree; }
  const Schema& schema() const override { return schema_; }
  const ClassDistribution& class_totals() const override { return totals_; }
  Label predict(SymbolView features) const override;
  void save(std::ostream& out) const override;

  IgClassification classify_full(SymbolView features) const;
  const IgTree& tree() const { return tree_; }
  TreeStats stats() const { return tree_stats(tree_, source_unique_vectors_); }

 private:
  Schema schema_;
  IgTree tree_;
  ClassDistribution totals_;
  std::uint64_t source_unique_vectors_;
};

MblModel make_ib1(InstanceBase base);
MblModel make_ib1ig(InstanceBase base);
IgTreeModel make_igtree(const InstanceBase& base);

std::unique_ptr<Model> train_model(InstanceBase base, Algorithm algo);

}  // namespace mbseg

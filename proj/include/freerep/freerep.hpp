#pragma once

// Umbrella header.

#include "freerep/error.hpp"
#include "freerep/element_set.hpp"
#include "freerep/group.hpp"
#include "freerep/subgroup.hpp"
#include "freerep/structure.hpp"
#include "freerep/number_theory.hpp"
#include "freerep/isomorphism.hpp"
#include "freerep/constructors.hpp"
#include "freerep/closure.hpp"
#include "freerep/rational.hpp"
#include "freerep/quad_field.hpp"
#include "freerep/cyclotomic.hpp"
#include "freerep/quaternion.hpp"
#include "freerep/binary_polyhedral.hpp"
#include "freerep/classifier.hpp"
#include "freerep/group_algebra.hpp"
#include "freerep/norm_relations.hpp"
#include "freerep/representations.hpp"
#include "freerep/sl2_census.hpp"
#include "freerep/group_spec.hpp"
#include "freerep/survey.hpp"
#include "freerep/serialize.hpp"

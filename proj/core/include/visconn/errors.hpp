#pragma once

#include <stdexcept>
#include <string>

namespace visconn {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class HullsIntersect : public Error {
public:
    explicit HullsIntersect(const std::string& what = "convex hulls intersect") : Error(what) {}
};

class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

class NotAPartition : public Error {
public:
    explicit NotAPartition(const std::string& what = "sets do not partition the vertices") : Error(what) {}
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what = "instance exceeds the exhaustive-sweep bound") : Error(what) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what = "vertex index out of range") : Error(what) {}
};

class OverlappingSets : public Error {
public:
    explicit OverlappingSets(const std::string& what = "point sets are not disjoint") : Error(what) {}
};

class DiameterTooLarge : public Error {
public:
    explicit DiameterTooLarge(const std::string& what = "graph diameter exceeds 2") : Error(what) {}
};

class SideConditionsFailed : public Error {
public:
    explicit SideConditionsFailed(const std::string& what) : Error(what) {}
};

class Unsatisfiable : public Error {
public:
    explicit Unsatisfiable(const std::string& what) : Error(what) {}
};

class PointNotOnCurve : public Error {
public:
    explicit PointNotOnCurve(const std::string& what = "point does not satisfy the curve equation") : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace visconn

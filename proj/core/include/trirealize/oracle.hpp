#pragma once

#include <span>
#include <vector>

#include "trirealize/angles.hpp"
#include "trirealize/figure.hpp"
#include "trirealize/geometry.hpp"

// Direct coordinate constructions used to cross-check the realizer. Nothing
// here walks fans or places vertices from angle maps.
namespace trirealize::oracle {

struct Line {
  Vec2 point;
  Vec2 direction;
};

// Throws ScenarioError for (near-)parallel lines.
Vec2 intersect(const Line& l, const Line& m);

// Line through `from` whose direction is (toward - from) rotated by deg.
Line ray(Vec2 from, Vec2 toward, double deg);
Line through(Vec2 a, Vec2 b);

double distance_to_line(Vec2 q, const Line& line);

// Parameter t with intersect(...) == a + t (b - a).
double segment_parameter(Vec2 q, Vec2 a, Vec2 b);

// Interior angle at a of triangle (a, b, c), degrees.
double angle_at(Vec2 a, Vec2 b, Vec2 c);

// Triangle with A=(0,0), B=(1,0) and the given angles at A and B.
Vec2 apex_from_angles(double angle_a, double angle_b);

// Internal bisector at x of the angle between x->p and x->n.
Line bisector(Vec2 x, Vec2 p, Vec2 n);

Vec2 on_unit_circle(double deg);

// Corner angles of every triangle, measured from coordinates.
AngleAssignment measure(std::span<const Vec2> coords, const Figure& figure);

double max_distance(std::span<const Vec2> points);

// max side / min side - 1.
double equilateral_deviation(Vec2 a, Vec2 b, Vec2 c);

}  // namespace trirealize::oracle

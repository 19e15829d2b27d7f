// generated by tools/gen_lebedev.py, do not edit
#pragma once
#include <array>
#include <cstddef>

namespace rvmb::lebedev_data {

inline constexpr std::size_t kN5 = 14;
inline constexpr std::array<double, 56> kRule5 = {
    1.0, 0.0, 0.0, 0.8377580409572781,
    -1.0, 0.0, 0.0, 0.8377580409572781,
    0.0, 1.0, 0.0, 0.8377580409572781,
    0.0, -1.0, 0.0, 0.8377580409572781,
    0.0, 0.0, 1.0, 0.8377580409572781,
    0.0, 0.0, -1.0, 0.8377580409572781,
    0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.9424777960769379,
    -0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.9424777960769379,
    0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.9424777960769379,
    0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.9424777960769379,
    -0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.9424777960769379,
    0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.9424777960769379,
    -0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.9424777960769379,
    -0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.9424777960769379,
};

inline constexpr std::size_t kN7 = 26;
inline constexpr std::array<double, 104> kRule7 = {
    1.0, 0.0, 0.0, 0.5983986006837702,
    -1.0, 0.0, 0.0, 0.5983986006837702,
    0.0, 1.0, 0.0, 0.5983986006837702,
    0.0, -1.0, 0.0, 0.5983986006837702,
    0.0, 0.0, 1.0, 0.5983986006837702,
    0.0, 0.0, -1.0, 0.5983986006837702,
    0.0, 0.7071067811865476, 0.7071067811865476, 0.4787188805470161,
    0.0, -0.7071067811865476, 0.7071067811865476, 0.4787188805470161,
    0.0, 0.7071067811865476, -0.7071067811865476, 0.4787188805470161,
    0.0, -0.7071067811865476, -0.7071067811865476, 0.4787188805470161,
    0.7071067811865476, 0.0, 0.7071067811865476, 0.4787188805470161,
    0.7071067811865476, 0.0, -0.7071067811865476, 0.4787188805470161,
    -0.7071067811865476, 0.0, 0.7071067811865476, 0.4787188805470161,
    -0.7071067811865476, 0.0, -0.7071067811865476, 0.4787188805470161,
    0.7071067811865476, 0.7071067811865476, 0.0, 0.4787188805470161,
    -0.7071067811865476, 0.7071067811865476, 0.0, 0.4787188805470161,
    0.7071067811865476, -0.7071067811865476, 0.0, 0.4787188805470161,
    -0.7071067811865476, -0.7071067811865476, 0.0, 0.4787188805470161,
    0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.4039190554615448,
    -0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.4039190554615448,
    0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.4039190554615448,
    0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.4039190554615448,
    -0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.4039190554615448,
    0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.4039190554615448,
    -0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.4039190554615448,
    -0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.4039190554615448,
};

inline constexpr std::size_t kN11 = 50;
inline constexpr std::array<double, 200> kRule11 = {
    1.0, 0.0, 0.0, 0.1595729601823387,
    -1.0, 0.0, 0.0, 0.1595729601823387,
    0.0, 1.0, 0.0, 0.1595729601823387,
    0.0, -1.0, 0.0, 0.1595729601823387,
    0.0, 0.0, 1.0, 0.1595729601823387,
    0.0, 0.0, -1.0, 0.1595729601823387,
    0.0, 0.7071067811865476, 0.7071067811865476, 0.2836852625463799,
    0.0, -0.7071067811865476, 0.7071067811865476, 0.2836852625463799,
    0.0, 0.7071067811865476, -0.7071067811865476, 0.2836852625463799,
    0.0, -0.7071067811865476, -0.7071067811865476, 0.2836852625463799,
    0.7071067811865476, 0.0, 0.7071067811865476, 0.2836852625463799,
    0.7071067811865476, 0.0, -0.7071067811865476, 0.2836852625463799,
    -0.7071067811865476, 0.0, 0.7071067811865476, 0.2836852625463799,
    -0.7071067811865476, 0.0, -0.7071067811865476, 0.2836852625463799,
    0.7071067811865476, 0.7071067811865476, 0.0, 0.2836852625463799,
    -0.7071067811865476, 0.7071067811865476, 0.0, 0.2836852625463799,
    0.7071067811865476, -0.7071067811865476, 0.0, 0.2836852625463799,
    -0.7071067811865476, -0.7071067811865476, 0.0, 0.2836852625463799,
    0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.2650718801466388,
    -0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.2650718801466388,
    0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.2650718801466388,
    0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.2650718801466388,
    -0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.2650718801466388,
    0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.2650718801466388,
    -0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.2650718801466388,
    -0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.2650718801466388,
    0.3015113445777636, 0.3015113445777636, 0.9045340337332909, 0.2535056108973113,
    -0.3015113445777636, 0.3015113445777636, 0.9045340337332909, 0.2535056108973113,
    0.3015113445777636, -0.3015113445777636, 0.9045340337332909, 0.2535056108973113,
    0.3015113445777636, 0.3015113445777636, -0.9045340337332909, 0.2535056108973113,
    -0.3015113445777636, -0.3015113445777636, 0.9045340337332909, 0.2535056108973113,
    -0.3015113445777636, 0.3015113445777636, -0.9045340337332909, 0.2535056108973113,
    0.3015113445777636, -0.3015113445777636, -0.9045340337332909, 0.2535056108973113,
    -0.3015113445777636, -0.3015113445777636, -0.9045340337332909, 0.2535056108973113,
    -0.3015113445777636, 0.9045340337332909, 0.3015113445777636, 0.2535056108973113,
    0.3015113445777636, -0.9045340337332909, 0.3015113445777636, 0.2535056108973113,
    0.3015113445777636, 0.9045340337332909, -0.3015113445777636, 0.2535056108973113,
    -0.3015113445777636, -0.9045340337332909, 0.3015113445777636, 0.2535056108973113,
    -0.3015113445777636, 0.9045340337332909, -0.3015113445777636, 0.2535056108973113,
    0.3015113445777636, -0.9045340337332909, -0.3015113445777636, 0.2535056108973113,
    -0.3015113445777636, -0.9045340337332909, -0.3015113445777636, 0.2535056108973113,
    0.3015113445777636, 0.9045340337332909, 0.3015113445777636, 0.2535056108973113,
    0.9045340337332909, 0.3015113445777636, 0.3015113445777636, 0.2535056108973113,
    -0.9045340337332909, 0.3015113445777636, 0.3015113445777636, 0.2535056108973113,
    0.9045340337332909, -0.3015113445777636, 0.3015113445777636, 0.2535056108973113,
    0.9045340337332909, 0.3015113445777636, -0.3015113445777636, 0.2535056108973113,
    -0.9045340337332909, -0.3015113445777636, 0.3015113445777636, 0.2535056108973113,
    -0.9045340337332909, 0.3015113445777636, -0.3015113445777636, 0.2535056108973113,
    0.9045340337332909, -0.3015113445777636, -0.3015113445777636, 0.2535056108973113,
    -0.9045340337332909, -0.3015113445777636, -0.3015113445777636, 0.2535056108973113,
};

inline constexpr std::size_t kN17 = 110;
inline constexpr std::array<double, 440> kRule17 = {
    1.0, 0.0, 0.0, 0.048107465851396594,
    -1.0, 0.0, 0.0, 0.048107465851396594,
    0.0, 1.0, 0.0, 0.048107465851396594,
    0.0, -1.0, 0.0, 0.048107465851396594,
    0.0, 0.0, 1.0, 0.048107465851396594,
    0.0, 0.0, -1.0, 0.048107465851396594,
    0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.12307173528167017,
    -0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.12307173528167017,
    0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.12307173528167017,
    0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.12307173528167017,
    -0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.12307173528167017,
    0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.12307173528167017,
    -0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.12307173528167017,
    -0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.12307173528167017,
    0.1851156353447362, 0.1851156353447362, 0.9651240350865941, 0.1031917340883304,
    -0.1851156353447362, 0.1851156353447362, 0.9651240350865941, 0.1031917340883304,
    0.1851156353447362, -0.1851156353447362, 0.9651240350865941, 0.1031917340883304,
    0.1851156353447362, 0.1851156353447362, -0.9651240350865941, 0.1031917340883304,
    -0.1851156353447362, -0.1851156353447362, 0.9651240350865941, 0.1031917340883304,
    -0.1851156353447362, 0.1851156353447362, -0.9651240350865941, 0.1031917340883304,
    0.1851156353447362, -0.1851156353447362, -0.9651240350865941, 0.1031917340883304,
    -0.1851156353447362, -0.1851156353447362, -0.9651240350865941, 0.1031917340883304,
    -0.1851156353447362, 0.9651240350865941, 0.1851156353447362, 0.1031917340883304,
    0.1851156353447362, -0.9651240350865941, 0.1851156353447362, 0.1031917340883304,
    0.1851156353447362, 0.9651240350865941, -0.1851156353447362, 0.1031917340883304,
    -0.1851156353447362, -0.9651240350865941, 0.1851156353447362, 0.1031917340883304,
    -0.1851156353447362, 0.9651240350865941, -0.1851156353447362, 0.1031917340883304,
    0.1851156353447362, -0.9651240350865941, -0.1851156353447362, 0.1031917340883304,
    -0.1851156353447362, -0.9651240350865941, -0.1851156353447362, 0.1031917340883304,
    0.1851156353447362, 0.9651240350865941, 0.1851156353447362, 0.1031917340883304,
    0.9651240350865941, 0.1851156353447362, 0.1851156353447362, 0.1031917340883304,
    -0.9651240350865941, 0.1851156353447362, 0.1851156353447362, 0.1031917340883304,
    0.9651240350865941, -0.1851156353447362, 0.1851156353447362, 0.1031917340883304,
    0.9651240350865941, 0.1851156353447362, -0.1851156353447362, 0.1031917340883304,
    -0.9651240350865941, -0.1851156353447362, 0.1851156353447362, 0.1031917340883304,
    -0.9651240350865941, 0.1851156353447362, -0.1851156353447362, 0.1031917340883304,
    0.9651240350865941, -0.1851156353447362, -0.1851156353447362, 0.1031917340883304,
    -0.9651240350865941, -0.1851156353447362, -0.1851156353447362, 0.1031917340883304,
    0.6904210483822922, 0.6904210483822922, 0.21595729184584844, 0.1249450968725133,
    -0.6904210483822922, 0.6904210483822922, 0.21595729184584844, 0.1249450968725133,
    0.6904210483822922, -0.6904210483822922, 0.21595729184584844, 0.1249450968725133,
    0.6904210483822922, 0.6904210483822922, -0.21595729184584844, 0.1249450968725133,
    -0.6904210483822922, -0.6904210483822922, 0.21595729184584844, 0.1249450968725133,
    -0.6904210483822922, 0.6904210483822922, -0.21595729184584844, 0.1249450968725133,
    0.6904210483822922, -0.6904210483822922, -0.21595729184584844, 0.1249450968725133,
    -0.6904210483822922, -0.6904210483822922, -0.21595729184584844, 0.1249450968725133,
    -0.6904210483822922, 0.21595729184584844, 0.6904210483822922, 0.1249450968725133,
    0.6904210483822922, -0.21595729184584844, 0.6904210483822922, 0.1249450968725133,
    0.6904210483822922, 0.21595729184584844, -0.6904210483822922, 0.1249450968725133,
    -0.6904210483822922, -0.21595729184584844, 0.6904210483822922, 0.1249450968725133,
    -0.6904210483822922, 0.21595729184584844, -0.6904210483822922, 0.1249450968725133,
    0.6904210483822922, -0.21595729184584844, -0.6904210483822922, 0.1249450968725133,
    -0.6904210483822922, -0.21595729184584844, -0.6904210483822922, 0.1249450968725133,
    0.6904210483822922, 0.21595729184584844, 0.6904210483822922, 0.1249450968725133,
    0.21595729184584844, 0.6904210483822922, 0.6904210483822922, 0.1249450968725133,
    -0.21595729184584844, 0.6904210483822922, 0.6904210483822922, 0.1249450968725133,
    0.21595729184584844, -0.6904210483822922, 0.6904210483822922, 0.1249450968725133,
    0.21595729184584844, 0.6904210483822922, -0.6904210483822922, 0.1249450968725133,
    -0.21595729184584844, -0.6904210483822922, 0.6904210483822922, 0.1249450968725133,
    -0.21595729184584844, 0.6904210483822922, -0.6904210483822922, 0.1249450968725133,
    0.21595729184584844, -0.6904210483822922, -0.6904210483822922, 0.1249450968725133,
    -0.21595729184584844, -0.6904210483822922, -0.6904210483822922, 0.1249450968725133,
    0.3956894730559419, 0.3956894730559419, 0.8287699812525923, 0.12058024902852789,
    -0.3956894730559419, 0.3956894730559419, 0.8287699812525923, 0.12058024902852789,
    0.3956894730559419, -0.3956894730559419, 0.8287699812525923, 0.12058024902852789,
    0.3956894730559419, 0.3956894730559419, -0.8287699812525923, 0.12058024902852789,
    -0.3956894730559419, -0.3956894730559419, 0.8287699812525923, 0.12058024902852789,
    -0.3956894730559419, 0.3956894730559419, -0.8287699812525923, 0.12058024902852789,
    0.3956894730559419, -0.3956894730559419, -0.8287699812525923, 0.12058024902852789,
    -0.3956894730559419, -0.3956894730559419, -0.8287699812525923, 0.12058024902852789,
    -0.3956894730559419, 0.8287699812525923, 0.3956894730559419, 0.12058024902852789,
    0.3956894730559419, -0.8287699812525923, 0.3956894730559419, 0.12058024902852789,
    0.3956894730559419, 0.8287699812525923, -0.3956894730559419, 0.12058024902852789,
    -0.3956894730559419, -0.8287699812525923, 0.3956894730559419, 0.12058024902852789,
    -0.3956894730559419, 0.8287699812525923, -0.3956894730559419, 0.12058024902852789,
    0.3956894730559419, -0.8287699812525923, -0.3956894730559419, 0.12058024902852789,
    -0.3956894730559419, -0.8287699812525923, -0.3956894730559419, 0.12058024902852789,
    0.3956894730559419, 0.8287699812525923, 0.3956894730559419, 0.12058024902852789,
    0.8287699812525923, 0.3956894730559419, 0.3956894730559419, 0.12058024902852789,
    -0.8287699812525923, 0.3956894730559419, 0.3956894730559419, 0.12058024902852789,
    0.8287699812525923, -0.3956894730559419, 0.3956894730559419, 0.12058024902852789,
    0.8287699812525923, 0.3956894730559419, -0.3956894730559419, 0.12058024902852789,
    -0.8287699812525923, -0.3956894730559419, 0.3956894730559419, 0.12058024902852789,
    -0.8287699812525923, 0.3956894730559419, -0.3956894730559419, 0.12058024902852789,
    0.8287699812525923, -0.3956894730559419, -0.3956894730559419, 0.12058024902852789,
    -0.8287699812525923, -0.3956894730559419, -0.3956894730559419, 0.12058024902852789,
    0.4783690288121502, 0.8781589106040661, 0.0, 0.12183091738552138,
    -0.4783690288121502, 0.8781589106040661, 0.0, 0.12183091738552138,
    0.4783690288121502, -0.8781589106040661, 0.0, 0.12183091738552138,
    -0.4783690288121502, -0.8781589106040661, 0.0, 0.12183091738552138,
    0.8781589106040661, 0.4783690288121502, 0.0, 0.12183091738552138,
    -0.8781589106040661, 0.4783690288121502, 0.0, 0.12183091738552138,
    0.8781589106040661, -0.4783690288121502, 0.0, 0.12183091738552138,
    -0.8781589106040661, -0.4783690288121502, 0.0, 0.12183091738552138,
    0.4783690288121502, 0.0, 0.8781589106040661, 0.12183091738552138,
    -0.4783690288121502, 0.0, 0.8781589106040661, 0.12183091738552138,
    0.4783690288121502, 0.0, -0.8781589106040661, 0.12183091738552138,
    -0.4783690288121502, 0.0, -0.8781589106040661, 0.12183091738552138,
    0.8781589106040661, 0.0, 0.4783690288121502, 0.12183091738552138,
    -0.8781589106040661, 0.0, 0.4783690288121502, 0.12183091738552138,
    0.8781589106040661, 0.0, -0.4783690288121502, 0.12183091738552138,
    -0.8781589106040661, 0.0, -0.4783690288121502, 0.12183091738552138,
    0.0, 0.4783690288121502, 0.8781589106040661, 0.12183091738552138,
    0.0, -0.4783690288121502, 0.8781589106040661, 0.12183091738552138,
    0.0, 0.4783690288121502, -0.8781589106040661, 0.12183091738552138,
    0.0, -0.4783690288121502, -0.8781589106040661, 0.12183091738552138,
    0.0, 0.8781589106040661, 0.4783690288121502, 0.12183091738552138,
    0.0, -0.8781589106040661, 0.4783690288121502, 0.12183091738552138,
    0.0, 0.8781589106040661, -0.4783690288121502, 0.12183091738552138,
    0.0, -0.8781589106040661, -0.4783690288121502, 0.12183091738552138,
};

inline constexpr std::size_t kN27 = 266;
inline constexpr std::array<double, 1064> kRule27 = {
    1.0, 0.0, 0.0, -0.016509309755693702,
    -1.0, 0.0, 0.0, -0.016509309755693702,
    0.0, 1.0, 0.0, -0.016509309755693702,
    0.0, -1.0, 0.0, -0.016509309755693702,
    0.0, 0.0, 1.0, -0.016509309755693702,
    0.0, 0.0, -1.0, -0.016509309755693702,
    0.0, 0.7071067811865476, 0.7071067811865476, -0.03170154386474473,
    0.0, -0.7071067811865476, 0.7071067811865476, -0.03170154386474473,
    0.0, 0.7071067811865476, -0.7071067811865476, -0.03170154386474473,
    0.0, -0.7071067811865476, -0.7071067811865476, -0.03170154386474473,
    0.7071067811865476, 0.0, 0.7071067811865476, -0.03170154386474473,
    0.7071067811865476, 0.0, -0.7071067811865476, -0.03170154386474473,
    -0.7071067811865476, 0.0, 0.7071067811865476, -0.03170154386474473,
    -0.7071067811865476, 0.0, -0.7071067811865476, -0.03170154386474473,
    0.7071067811865476, 0.7071067811865476, 0.0, -0.03170154386474473,
    -0.7071067811865476, 0.7071067811865476, 0.0, -0.03170154386474473,
    0.7071067811865476, -0.7071067811865476, 0.0, -0.03170154386474473,
    -0.7071067811865476, -0.7071067811865476, 0.0, -0.03170154386474473,
    0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.052613557585617844,
    -0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.052613557585617844,
    0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.052613557585617844,
    0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.052613557585617844,
    -0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.052613557585617844,
    0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.052613557585617844,
    -0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.052613557585617844,
    -0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.052613557585617844,
    0.7039373391585475, 0.7039373391585475, 0.0945750764037131, 0.06679237068674557,
    -0.7039373391585475, 0.7039373391585475, 0.0945750764037131, 0.06679237068674557,
    0.7039373391585475, -0.7039373391585475, 0.0945750764037131, 0.06679237068674557,
    0.7039373391585475, 0.7039373391585475, -0.0945750764037131, 0.06679237068674557,
    -0.7039373391585475, -0.7039373391585475, 0.0945750764037131, 0.06679237068674557,
    -0.7039373391585475, 0.7039373391585475, -0.0945750764037131, 0.06679237068674557,
    0.7039373391585475, -0.7039373391585475, -0.0945750764037131, 0.06679237068674557,
    -0.7039373391585475, -0.7039373391585475, -0.0945750764037131, 0.06679237068674557,
    -0.7039373391585475, 0.0945750764037131, 0.7039373391585475, 0.06679237068674557,
    0.7039373391585475, -0.0945750764037131, 0.7039373391585475, 0.06679237068674557,
    0.7039373391585475, 0.0945750764037131, -0.7039373391585475, 0.06679237068674557,
    -0.7039373391585475, -0.0945750764037131, 0.7039373391585475, 0.06679237068674557,
    -0.7039373391585475, 0.0945750764037131, -0.7039373391585475, 0.06679237068674557,
    0.7039373391585475, -0.0945750764037131, -0.7039373391585475, 0.06679237068674557,
    -0.7039373391585475, -0.0945750764037131, -0.7039373391585475, 0.06679237068674557,
    0.7039373391585475, 0.0945750764037131, 0.7039373391585475, 0.06679237068674557,
    0.0945750764037131, 0.7039373391585475, 0.7039373391585475, 0.06679237068674557,
    -0.0945750764037131, 0.7039373391585475, 0.7039373391585475, 0.06679237068674557,
    0.0945750764037131, -0.7039373391585475, 0.7039373391585475, 0.06679237068674557,
    0.0945750764037131, 0.7039373391585475, -0.7039373391585475, 0.06679237068674557,
    -0.0945750764037131, -0.7039373391585475, 0.7039373391585475, 0.06679237068674557,
    -0.0945750764037131, 0.7039373391585475, -0.7039373391585475, 0.06679237068674557,
    0.0945750764037131, -0.7039373391585475, -0.7039373391585475, 0.06679237068674557,
    -0.0945750764037131, -0.7039373391585475, -0.7039373391585475, 0.06679237068674557,
    0.1012526248572414, 0.1012526248572414, 0.9896948074629054, 0.050857891039543995,
    -0.1012526248572414, 0.1012526248572414, 0.9896948074629054, 0.050857891039543995,
    0.1012526248572414, -0.1012526248572414, 0.9896948074629054, 0.050857891039543995,
    0.1012526248572414, 0.1012526248572414, -0.9896948074629054, 0.050857891039543995,
    -0.1012526248572414, -0.1012526248572414, 0.9896948074629054, 0.050857891039543995,
    -0.1012526248572414, 0.1012526248572414, -0.9896948074629054, 0.050857891039543995,
    0.1012526248572414, -0.1012526248572414, -0.9896948074629054, 0.050857891039543995,
    -0.1012526248572414, -0.1012526248572414, -0.9896948074629054, 0.050857891039543995,
    -0.1012526248572414, 0.9896948074629054, 0.1012526248572414, 0.050857891039543995,
    0.1012526248572414, -0.9896948074629054, 0.1012526248572414, 0.050857891039543995,
    0.1012526248572414, 0.9896948074629054, -0.1012526248572414, 0.050857891039543995,
    -0.1012526248572414, -0.9896948074629054, 0.1012526248572414, 0.050857891039543995,
    -0.1012526248572414, 0.9896948074629054, -0.1012526248572414, 0.050857891039543995,
    0.1012526248572414, -0.9896948074629054, -0.1012526248572414, 0.050857891039543995,
    -0.1012526248572414, -0.9896948074629054, -0.1012526248572414, 0.050857891039543995,
    0.1012526248572414, 0.9896948074629054, 0.1012526248572414, 0.050857891039543995,
    0.9896948074629054, 0.1012526248572414, 0.1012526248572414, 0.050857891039543995,
    -0.9896948074629054, 0.1012526248572414, 0.1012526248572414, 0.050857891039543995,
    0.9896948074629054, -0.1012526248572414, 0.1012526248572414, 0.050857891039543995,
    0.9896948074629054, 0.1012526248572414, -0.1012526248572414, 0.050857891039543995,
    -0.9896948074629054, -0.1012526248572414, 0.1012526248572414, 0.050857891039543995,
    -0.9896948074629054, 0.1012526248572414, -0.1012526248572414, 0.050857891039543995,
    0.9896948074629054, -0.1012526248572414, -0.1012526248572414, 0.050857891039543995,
    -0.9896948074629054, -0.1012526248572414, -0.1012526248572414, 0.050857891039543995,
    0.4647448726420539, 0.4647448726420539, 0.7536739392508157, 0.05167897791314545,
    -0.4647448726420539, 0.4647448726420539, 0.7536739392508157, 0.05167897791314545,
    0.4647448726420539, -0.4647448726420539, 0.7536739392508157, 0.05167897791314545,
    0.4647448726420539, 0.4647448726420539, -0.7536739392508157, 0.05167897791314545,
    -0.4647448726420539, -0.4647448726420539, 0.7536739392508157, 0.05167897791314545,
    -0.4647448726420539, 0.4647448726420539, -0.7536739392508157, 0.05167897791314545,
    0.4647448726420539, -0.4647448726420539, -0.7536739392508157, 0.05167897791314545,
    -0.4647448726420539, -0.4647448726420539, -0.7536739392508157, 0.05167897791314545,
    -0.4647448726420539, 0.7536739392508157, 0.4647448726420539, 0.05167897791314545,
    0.4647448726420539, -0.7536739392508157, 0.4647448726420539, 0.05167897791314545,
    0.4647448726420539, 0.7536739392508157, -0.4647448726420539, 0.05167897791314545,
    -0.4647448726420539, -0.7536739392508157, 0.4647448726420539, 0.05167897791314545,
    -0.4647448726420539, 0.7536739392508157, -0.4647448726420539, 0.05167897791314545,
    0.4647448726420539, -0.7536739392508157, -0.4647448726420539, 0.05167897791314545,
    -0.4647448726420539, -0.7536739392508157, -0.4647448726420539, 0.05167897791314545,
    0.4647448726420539, 0.7536739392508157, 0.4647448726420539, 0.05167897791314545,
    0.7536739392508157, 0.4647448726420539, 0.4647448726420539, 0.05167897791314545,
    -0.7536739392508157, 0.4647448726420539, 0.4647448726420539, 0.05167897791314545,
    0.7536739392508157, -0.4647448726420539, 0.4647448726420539, 0.05167897791314545,
    0.7536739392508157, 0.4647448726420539, -0.4647448726420539, 0.05167897791314545,
    -0.7536739392508157, -0.4647448726420539, 0.4647448726420539, 0.05167897791314545,
    -0.7536739392508157, 0.4647448726420539, -0.4647448726420539, 0.05167897791314545,
    0.7536739392508157, -0.4647448726420539, -0.4647448726420539, 0.05167897791314545,
    -0.7536739392508157, -0.4647448726420539, -0.4647448726420539, 0.05167897791314545,
    0.3277420654971629, 0.3277420654971629, 0.8860983449974991, 0.04518345242576233,
    -0.3277420654971629, 0.3277420654971629, 0.8860983449974991, 0.04518345242576233,
    0.3277420654971629, -0.3277420654971629, 0.8860983449974991, 0.04518345242576233,
    0.3277420654971629, 0.3277420654971629, -0.8860983449974991, 0.04518345242576233,
    -0.3277420654971629, -0.3277420654971629, 0.8860983449974991, 0.04518345242576233,
    -0.3277420654971629, 0.3277420654971629, -0.8860983449974991, 0.04518345242576233,
    0.3277420654971629, -0.3277420654971629, -0.8860983449974991, 0.04518345242576233,
    -0.3277420654971629, -0.3277420654971629, -0.8860983449974991, 0.04518345242576233,
    -0.3277420654971629, 0.8860983449974991, 0.3277420654971629, 0.04518345242576233,
    0.3277420654971629, -0.8860983449974991, 0.3277420654971629, 0.04518345242576233,
    0.3277420654971629, 0.8860983449974991, -0.3277420654971629, 0.04518345242576233,
    -0.3277420654971629, -0.8860983449974991, 0.3277420654971629, 0.04518345242576233,
    -0.3277420654971629, 0.8860983449974991, -0.3277420654971629, 0.04518345242576233,
    0.3277420654971629, -0.8860983449974991, -0.3277420654971629, 0.04518345242576233,
    -0.3277420654971629, -0.8860983449974991, -0.3277420654971629, 0.04518345242576233,
    0.3277420654971629, 0.8860983449974991, 0.3277420654971629, 0.04518345242576233,
    0.8860983449974991, 0.3277420654971629, 0.3277420654971629, 0.04518345242576233,
    -0.8860983449974991, 0.3277420654971629, 0.3277420654971629, 0.04518345242576233,
    0.8860983449974991, -0.3277420654971629, 0.3277420654971629, 0.04518345242576233,
    0.8860983449974991, 0.3277420654971629, -0.3277420654971629, 0.04518345242576233,
    -0.8860983449974991, -0.3277420654971629, 0.3277420654971629, 0.04518345242576233,
    -0.8860983449974991, 0.3277420654971629, -0.3277420654971629, 0.04518345242576233,
    0.8860983449974991, -0.3277420654971629, -0.3277420654971629, 0.04518345242576233,
    -0.8860983449974991, -0.3277420654971629, -0.3277420654971629, 0.04518345242576233,
    0.6620338663699974, 0.6620338663699974, 0.3513151285646334, 0.053484123945439596,
    -0.6620338663699974, 0.6620338663699974, 0.3513151285646334, 0.053484123945439596,
    0.6620338663699974, -0.6620338663699974, 0.3513151285646334, 0.053484123945439596,
    0.6620338663699974, 0.6620338663699974, -0.3513151285646334, 0.053484123945439596,
    -0.6620338663699974, -0.6620338663699974, 0.3513151285646334, 0.053484123945439596,
    -0.6620338663699974, 0.6620338663699974, -0.3513151285646334, 0.053484123945439596,
    0.6620338663699974, -0.6620338663699974, -0.3513151285646334, 0.053484123945439596,
    -0.6620338663699974, -0.6620338663699974, -0.3513151285646334, 0.053484123945439596,
    -0.6620338663699974, 0.3513151285646334, 0.6620338663699974, 0.053484123945439596,
    0.6620338663699974, -0.3513151285646334, 0.6620338663699974, 0.053484123945439596,
    0.6620338663699974, 0.3513151285646334, -0.6620338663699974, 0.053484123945439596,
    -0.6620338663699974, -0.3513151285646334, 0.6620338663699974, 0.053484123945439596,
    -0.6620338663699974, 0.3513151285646334, -0.6620338663699974, 0.053484123945439596,
    0.6620338663699974, -0.3513151285646334, -0.6620338663699974, 0.053484123945439596,
    -0.6620338663699974, -0.3513151285646334, -0.6620338663699974, 0.053484123945439596,
    0.6620338663699974, 0.3513151285646334, 0.6620338663699974, 0.053484123945439596,
    0.3513151285646334, 0.6620338663699974, 0.6620338663699974, 0.053484123945439596,
    -0.3513151285646334, 0.6620338663699974, 0.6620338663699974, 0.053484123945439596,
    0.3513151285646334, -0.6620338663699974, 0.6620338663699974, 0.053484123945439596,
    0.3513151285646334, 0.6620338663699974, -0.6620338663699974, 0.053484123945439596,
    -0.3513151285646334, -0.6620338663699974, 0.6620338663699974, 0.053484123945439596,
    -0.3513151285646334, 0.6620338663699974, -0.6620338663699974, 0.053484123945439596,
    0.3513151285646334, -0.6620338663699974, -0.6620338663699974, 0.053484123945439596,
    -0.3513151285646334, -0.6620338663699974, -0.6620338663699974, 0.053484123945439596,
    0.8506508083520399, 0.5257311121191337, 0.0, 0.053150503760415385,
    -0.8506508083520399, 0.5257311121191337, 0.0, 0.053150503760415385,
    0.8506508083520399, -0.5257311121191337, 0.0, 0.053150503760415385,
    -0.8506508083520399, -0.5257311121191337, 0.0, 0.053150503760415385,
    0.5257311121191337, 0.8506508083520399, 0.0, 0.053150503760415385,
    -0.5257311121191337, 0.8506508083520399, 0.0, 0.053150503760415385,
    0.5257311121191337, -0.8506508083520399, 0.0, 0.053150503760415385,
    -0.5257311121191337, -0.8506508083520399, 0.0, 0.053150503760415385,
    0.8506508083520399, 0.0, 0.5257311121191337, 0.053150503760415385,
    -0.8506508083520399, 0.0, 0.5257311121191337, 0.053150503760415385,
    0.8506508083520399, 0.0, -0.5257311121191337, 0.053150503760415385,
    -0.8506508083520399, 0.0, -0.5257311121191337, 0.053150503760415385,
    0.5257311121191337, 0.0, 0.8506508083520399, 0.053150503760415385,
    -0.5257311121191337, 0.0, 0.8506508083520399, 0.053150503760415385,
    0.5257311121191337, 0.0, -0.8506508083520399, 0.053150503760415385,
    -0.5257311121191337, 0.0, -0.8506508083520399, 0.053150503760415385,
    0.0, 0.8506508083520399, 0.5257311121191337, 0.053150503760415385,
    0.0, -0.8506508083520399, 0.5257311121191337, 0.053150503760415385,
    0.0, 0.8506508083520399, -0.5257311121191337, 0.053150503760415385,
    0.0, -0.8506508083520399, -0.5257311121191337, 0.053150503760415385,
    0.0, 0.5257311121191337, 0.8506508083520399, 0.053150503760415385,
    0.0, -0.5257311121191337, 0.8506508083520399, 0.053150503760415385,
    0.0, 0.5257311121191337, -0.8506508083520399, 0.053150503760415385,
    0.0, -0.5257311121191337, -0.8506508083520399, 0.053150503760415385,
    0.3233484542692899, 0.1153112011009701, 0.9392279297499158, 0.051282280606568455,
    -0.3233484542692899, 0.1153112011009701, 0.9392279297499158, 0.051282280606568455,
    0.3233484542692899, -0.1153112011009701, 0.9392279297499158, 0.051282280606568455,
    0.3233484542692899, 0.1153112011009701, -0.9392279297499158, 0.051282280606568455,
    -0.3233484542692899, -0.1153112011009701, 0.9392279297499158, 0.051282280606568455,
    0.3233484542692899, -0.1153112011009701, -0.9392279297499158, 0.051282280606568455,
    -0.3233484542692899, 0.1153112011009701, -0.9392279297499158, 0.051282280606568455,
    -0.3233484542692899, -0.1153112011009701, -0.9392279297499158, 0.051282280606568455,
    0.1153112011009701, 0.3233484542692899, 0.9392279297499158, 0.051282280606568455,
    -0.1153112011009701, 0.3233484542692899, 0.9392279297499158, 0.051282280606568455,
    0.1153112011009701, -0.3233484542692899, 0.9392279297499158, 0.051282280606568455,
    0.1153112011009701, 0.3233484542692899, -0.9392279297499158, 0.051282280606568455,
    -0.1153112011009701, -0.3233484542692899, 0.9392279297499158, 0.051282280606568455,
    0.1153112011009701, -0.3233484542692899, -0.9392279297499158, 0.051282280606568455,
    -0.1153112011009701, 0.3233484542692899, -0.9392279297499158, 0.051282280606568455,
    -0.1153112011009701, -0.3233484542692899, -0.9392279297499158, 0.051282280606568455,
    0.9392279297499158, 0.3233484542692899, 0.1153112011009701, 0.051282280606568455,
    -0.9392279297499158, 0.3233484542692899, 0.1153112011009701, 0.051282280606568455,
    0.9392279297499158, -0.3233484542692899, 0.1153112011009701, 0.051282280606568455,
    0.9392279297499158, 0.3233484542692899, -0.1153112011009701, 0.051282280606568455,
    -0.9392279297499158, -0.3233484542692899, 0.1153112011009701, 0.051282280606568455,
    0.9392279297499158, -0.3233484542692899, -0.1153112011009701, 0.051282280606568455,
    -0.9392279297499158, 0.3233484542692899, -0.1153112011009701, 0.051282280606568455,
    -0.9392279297499158, -0.3233484542692899, -0.1153112011009701, 0.051282280606568455,
    0.9392279297499158, 0.1153112011009701, 0.3233484542692899, 0.051282280606568455,
    -0.9392279297499158, 0.1153112011009701, 0.3233484542692899, 0.051282280606568455,
    0.9392279297499158, -0.1153112011009701, 0.3233484542692899, 0.051282280606568455,
    0.9392279297499158, 0.1153112011009701, -0.3233484542692899, 0.051282280606568455,
    -0.9392279297499158, -0.1153112011009701, 0.3233484542692899, 0.051282280606568455,
    0.9392279297499158, -0.1153112011009701, -0.3233484542692899, 0.051282280606568455,
    -0.9392279297499158, 0.1153112011009701, -0.3233484542692899, 0.051282280606568455,
    -0.9392279297499158, -0.1153112011009701, -0.3233484542692899, 0.051282280606568455,
    0.3233484542692899, 0.9392279297499158, 0.1153112011009701, 0.051282280606568455,
    -0.3233484542692899, 0.9392279297499158, 0.1153112011009701, 0.051282280606568455,
    0.3233484542692899, -0.9392279297499158, 0.1153112011009701, 0.051282280606568455,
    0.3233484542692899, 0.9392279297499158, -0.1153112011009701, 0.051282280606568455,
    -0.3233484542692899, -0.9392279297499158, 0.1153112011009701, 0.051282280606568455,
    0.3233484542692899, -0.9392279297499158, -0.1153112011009701, 0.051282280606568455,
    -0.3233484542692899, 0.9392279297499158, -0.1153112011009701, 0.051282280606568455,
    -0.3233484542692899, -0.9392279297499158, -0.1153112011009701, 0.051282280606568455,
    0.1153112011009701, 0.9392279297499158, 0.3233484542692899, 0.051282280606568455,
    -0.1153112011009701, 0.9392279297499158, 0.3233484542692899, 0.051282280606568455,
    0.1153112011009701, -0.9392279297499158, 0.3233484542692899, 0.051282280606568455,
    0.1153112011009701, 0.9392279297499158, -0.3233484542692899, 0.051282280606568455,
    -0.1153112011009701, -0.9392279297499158, 0.3233484542692899, 0.051282280606568455,
    0.1153112011009701, -0.9392279297499158, -0.3233484542692899, 0.051282280606568455,
    -0.1153112011009701, 0.9392279297499158, -0.3233484542692899, 0.051282280606568455,
    -0.1153112011009701, -0.9392279297499158, -0.3233484542692899, 0.051282280606568455,
    0.2314790158712601, 0.5244939240922365, 0.8193433888191203, 0.051163570728433076,
    -0.2314790158712601, 0.5244939240922365, 0.8193433888191203, 0.051163570728433076,
    0.2314790158712601, -0.5244939240922365, 0.8193433888191203, 0.051163570728433076,
    0.2314790158712601, 0.5244939240922365, -0.8193433888191203, 0.051163570728433076,
    -0.2314790158712601, -0.5244939240922365, 0.8193433888191203, 0.051163570728433076,
    0.2314790158712601, -0.5244939240922365, -0.8193433888191203, 0.051163570728433076,
    -0.2314790158712601, 0.5244939240922365, -0.8193433888191203, 0.051163570728433076,
    -0.2314790158712601, -0.5244939240922365, -0.8193433888191203, 0.051163570728433076,
    0.5244939240922365, 0.2314790158712601, 0.8193433888191203, 0.051163570728433076,
    -0.5244939240922365, 0.2314790158712601, 0.8193433888191203, 0.051163570728433076,
    0.5244939240922365, -0.2314790158712601, 0.8193433888191203, 0.051163570728433076,
    0.5244939240922365, 0.2314790158712601, -0.8193433888191203, 0.051163570728433076,
    -0.5244939240922365, -0.2314790158712601, 0.8193433888191203, 0.051163570728433076,
    0.5244939240922365, -0.2314790158712601, -0.8193433888191203, 0.051163570728433076,
    -0.5244939240922365, 0.2314790158712601, -0.8193433888191203, 0.051163570728433076,
    -0.5244939240922365, -0.2314790158712601, -0.8193433888191203, 0.051163570728433076,
    0.8193433888191203, 0.2314790158712601, 0.5244939240922365, 0.051163570728433076,
    -0.8193433888191203, 0.2314790158712601, 0.5244939240922365, 0.051163570728433076,
    0.8193433888191203, -0.2314790158712601, 0.5244939240922365, 0.051163570728433076,
    0.8193433888191203, 0.2314790158712601, -0.5244939240922365, 0.051163570728433076,
    -0.8193433888191203, -0.2314790158712601, 0.5244939240922365, 0.051163570728433076,
    0.8193433888191203, -0.2314790158712601, -0.5244939240922365, 0.051163570728433076,
    -0.8193433888191203, 0.2314790158712601, -0.5244939240922365, 0.051163570728433076,
    -0.8193433888191203, -0.2314790158712601, -0.5244939240922365, 0.051163570728433076,
    0.8193433888191203, 0.5244939240922365, 0.2314790158712601, 0.051163570728433076,
    -0.8193433888191203, 0.5244939240922365, 0.2314790158712601, 0.051163570728433076,
    0.8193433888191203, -0.5244939240922365, 0.2314790158712601, 0.051163570728433076,
    0.8193433888191203, 0.5244939240922365, -0.2314790158712601, 0.051163570728433076,
    -0.8193433888191203, -0.5244939240922365, 0.2314790158712601, 0.051163570728433076,
    0.8193433888191203, -0.5244939240922365, -0.2314790158712601, 0.051163570728433076,
    -0.8193433888191203, 0.5244939240922365, -0.2314790158712601, 0.051163570728433076,
    -0.8193433888191203, -0.5244939240922365, -0.2314790158712601, 0.051163570728433076,
    0.2314790158712601, 0.8193433888191203, 0.5244939240922365, 0.051163570728433076,
    -0.2314790158712601, 0.8193433888191203, 0.5244939240922365, 0.051163570728433076,
    0.2314790158712601, -0.8193433888191203, 0.5244939240922365, 0.051163570728433076,
    0.2314790158712601, 0.8193433888191203, -0.5244939240922365, 0.051163570728433076,
    -0.2314790158712601, -0.8193433888191203, 0.5244939240922365, 0.051163570728433076,
    0.2314790158712601, -0.8193433888191203, -0.5244939240922365, 0.051163570728433076,
    -0.2314790158712601, 0.8193433888191203, -0.5244939240922365, 0.051163570728433076,
    -0.2314790158712601, -0.8193433888191203, -0.5244939240922365, 0.051163570728433076,
    0.5244939240922365, 0.8193433888191203, 0.2314790158712601, 0.051163570728433076,
    -0.5244939240922365, 0.8193433888191203, 0.2314790158712601, 0.051163570728433076,
    0.5244939240922365, -0.8193433888191203, 0.2314790158712601, 0.051163570728433076,
    0.5244939240922365, 0.8193433888191203, -0.2314790158712601, 0.051163570728433076,
    -0.5244939240922365, -0.8193433888191203, 0.2314790158712601, 0.051163570728433076,
    0.5244939240922365, -0.8193433888191203, -0.2314790158712601, 0.051163570728433076,
    -0.5244939240922365, 0.8193433888191203, -0.2314790158712601, 0.051163570728433076,
    -0.5244939240922365, -0.8193433888191203, -0.2314790158712601, 0.051163570728433076,
};

inline constexpr std::size_t kN41 = 590;
inline constexpr std::array<double, 2360> kRule41 = {
    1.0, 0.0, 0.0, 0.003889444129321297,
    -1.0, 0.0, 0.0, 0.003889444129321297,
    0.0, 1.0, 0.0, 0.003889444129321297,
    0.0, -1.0, 0.0, 0.003889444129321297,
    0.0, 0.0, 1.0, 0.003889444129321297,
    0.0, 0.0, -1.0, 0.003889444129321297,
    0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.023277689811090987,
    -0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.023277689811090987,
    0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.023277689811090987,
    0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.023277689811090987,
    -0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.023277689811090987,
    0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.023277689811090987,
    -0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.023277689811090987,
    -0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.023277689811090987,
    0.7040954938227469, 0.7040954938227469, 0.09219040707689825, 0.023521614885652412,
    -0.7040954938227469, 0.7040954938227469, 0.09219040707689825, 0.023521614885652412,
    0.7040954938227469, -0.7040954938227469, 0.09219040707689825, 0.023521614885652412,
    0.7040954938227469, 0.7040954938227469, -0.09219040707689825, 0.023521614885652412,
    -0.7040954938227469, -0.7040954938227469, 0.09219040707689825, 0.023521614885652412,
    -0.7040954938227469, 0.7040954938227469, -0.09219040707689825, 0.023521614885652412,
    0.7040954938227469, -0.7040954938227469, -0.09219040707689825, 0.023521614885652412,
    -0.7040954938227469, -0.7040954938227469, -0.09219040707689825, 0.023521614885652412,
    -0.7040954938227469, 0.09219040707689825, 0.7040954938227469, 0.023521614885652412,
    0.7040954938227469, -0.09219040707689825, 0.7040954938227469, 0.023521614885652412,
    0.7040954938227469, 0.09219040707689825, -0.7040954938227469, 0.023521614885652412,
    -0.7040954938227469, -0.09219040707689825, 0.7040954938227469, 0.023521614885652412,
    -0.7040954938227469, 0.09219040707689825, -0.7040954938227469, 0.023521614885652412,
    0.7040954938227469, -0.09219040707689825, -0.7040954938227469, 0.023521614885652412,
    -0.7040954938227469, -0.09219040707689825, -0.7040954938227469, 0.023521614885652412,
    0.7040954938227469, 0.09219040707689825, 0.7040954938227469, 0.023521614885652412,
    0.09219040707689825, 0.7040954938227469, 0.7040954938227469, 0.023521614885652412,
    -0.09219040707689825, 0.7040954938227469, 0.7040954938227469, 0.023521614885652412,
    0.09219040707689825, -0.7040954938227469, 0.7040954938227469, 0.023521614885652412,
    0.09219040707689825, 0.7040954938227469, -0.7040954938227469, 0.023521614885652412,
    -0.09219040707689825, -0.7040954938227469, 0.7040954938227469, 0.023521614885652412,
    -0.09219040707689825, 0.7040954938227469, -0.7040954938227469, 0.023521614885652412,
    0.09219040707689825, -0.7040954938227469, -0.7040954938227469, 0.023521614885652412,
    -0.09219040707689825, -0.7040954938227469, -0.7040954938227469, 0.023521614885652412,
    0.6807744066455244, 0.6807744066455244, 0.2703560883591648, 0.023358527851253065,
    -0.6807744066455244, 0.6807744066455244, 0.2703560883591648, 0.023358527851253065,
    0.6807744066455244, -0.6807744066455244, 0.2703560883591648, 0.023358527851253065,
    0.6807744066455244, 0.6807744066455244, -0.2703560883591648, 0.023358527851253065,
    -0.6807744066455244, -0.6807744066455244, 0.2703560883591648, 0.023358527851253065,
    -0.6807744066455244, 0.6807744066455244, -0.2703560883591648, 0.023358527851253065,
    0.6807744066455244, -0.6807744066455244, -0.2703560883591648, 0.023358527851253065,
    -0.6807744066455244, -0.6807744066455244, -0.2703560883591648, 0.023358527851253065,
    -0.6807744066455244, 0.2703560883591648, 0.6807744066455244, 0.023358527851253065,
    0.6807744066455244, -0.2703560883591648, 0.6807744066455244, 0.023358527851253065,
    0.6807744066455244, 0.2703560883591648, -0.6807744066455244, 0.023358527851253065,
    -0.6807744066455244, -0.2703560883591648, 0.6807744066455244, 0.023358527851253065,
    -0.6807744066455244, 0.2703560883591648, -0.6807744066455244, 0.023358527851253065,
    0.6807744066455244, -0.2703560883591648, -0.6807744066455244, 0.023358527851253065,
    -0.6807744066455244, -0.2703560883591648, -0.6807744066455244, 0.023358527851253065,
    0.6807744066455244, 0.2703560883591648, 0.6807744066455244, 0.023358527851253065,
    0.2703560883591648, 0.6807744066455244, 0.6807744066455244, 0.023358527851253065,
    -0.2703560883591648, 0.6807744066455244, 0.6807744066455244, 0.023358527851253065,
    0.2703560883591648, -0.6807744066455244, 0.6807744066455244, 0.023358527851253065,
    0.2703560883591648, 0.6807744066455244, -0.6807744066455244, 0.023358527851253065,
    -0.2703560883591648, -0.6807744066455244, 0.6807744066455244, 0.023358527851253065,
    -0.2703560883591648, 0.6807744066455244, -0.6807744066455244, 0.023358527851253065,
    0.2703560883591648, -0.6807744066455244, -0.6807744066455244, 0.023358527851253065,
    -0.2703560883591648, -0.6807744066455244, -0.6807744066455244, 0.023358527851253065,
    0.6372546939258752, 0.6372546939258752, 0.4333738687771544, 0.023273280644847582,
    -0.6372546939258752, 0.6372546939258752, 0.4333738687771544, 0.023273280644847582,
    0.6372546939258752, -0.6372546939258752, 0.4333738687771544, 0.023273280644847582,
    0.6372546939258752, 0.6372546939258752, -0.4333738687771544, 0.023273280644847582,
    -0.6372546939258752, -0.6372546939258752, 0.4333738687771544, 0.023273280644847582,
    -0.6372546939258752, 0.6372546939258752, -0.4333738687771544, 0.023273280644847582,
    0.6372546939258752, -0.6372546939258752, -0.4333738687771544, 0.023273280644847582,
    -0.6372546939258752, -0.6372546939258752, -0.4333738687771544, 0.023273280644847582,
    -0.6372546939258752, 0.4333738687771544, 0.6372546939258752, 0.023273280644847582,
    0.6372546939258752, -0.4333738687771544, 0.6372546939258752, 0.023273280644847582,
    0.6372546939258752, 0.4333738687771544, -0.6372546939258752, 0.023273280644847582,
    -0.6372546939258752, -0.4333738687771544, 0.6372546939258752, 0.023273280644847582,
    -0.6372546939258752, 0.4333738687771544, -0.6372546939258752, 0.023273280644847582,
    0.6372546939258752, -0.4333738687771544, -0.6372546939258752, 0.023273280644847582,
    -0.6372546939258752, -0.4333738687771544, -0.6372546939258752, 0.023273280644847582,
    0.6372546939258752, 0.4333738687771544, 0.6372546939258752, 0.023273280644847582,
    0.4333738687771544, 0.6372546939258752, 0.6372546939258752, 0.023273280644847582,
    -0.4333738687771544, 0.6372546939258752, 0.6372546939258752, 0.023273280644847582,
    0.4333738687771544, -0.6372546939258752, 0.6372546939258752, 0.023273280644847582,
    0.4333738687771544, 0.6372546939258752, -0.6372546939258752, 0.023273280644847582,
    -0.4333738687771544, -0.6372546939258752, 0.6372546939258752, 0.023273280644847582,
    -0.4333738687771544, 0.6372546939258752, -0.6372546939258752, 0.023273280644847582,
    0.4333738687771544, -0.6372546939258752, -0.6372546939258752, 0.023273280644847582,
    -0.4333738687771544, -0.6372546939258752, -0.6372546939258752, 0.023273280644847582,
    0.5044419707800358, 0.5044419707800358, 0.700768575373573, 0.02320651712444717,
    -0.5044419707800358, 0.5044419707800358, 0.700768575373573, 0.02320651712444717,
    0.5044419707800358, -0.5044419707800358, 0.700768575373573, 0.02320651712444717,
    0.5044419707800358, 0.5044419707800358, -0.700768575373573, 0.02320651712444717,
    -0.5044419707800358, -0.5044419707800358, 0.700768575373573, 0.02320651712444717,
    -0.5044419707800358, 0.5044419707800358, -0.700768575373573, 0.02320651712444717,
    0.5044419707800358, -0.5044419707800358, -0.700768575373573, 0.02320651712444717,
    -0.5044419707800358, -0.5044419707800358, -0.700768575373573, 0.02320651712444717,
    -0.5044419707800358, 0.700768575373573, 0.5044419707800358, 0.02320651712444717,
    0.5044419707800358, -0.700768575373573, 0.5044419707800358, 0.02320651712444717,
    0.5044419707800358, 0.700768575373573, -0.5044419707800358, 0.02320651712444717,
    -0.5044419707800358, -0.700768575373573, 0.5044419707800358, 0.02320651712444717,
    -0.5044419707800358, 0.700768575373573, -0.5044419707800358, 0.02320651712444717,
    0.5044419707800358, -0.700768575373573, -0.5044419707800358, 0.02320651712444717,
    -0.5044419707800358, -0.700768575373573, -0.5044419707800358, 0.02320651712444717,
    0.5044419707800358, 0.700768575373573, 0.5044419707800358, 0.02320651712444717,
    0.700768575373573, 0.5044419707800358, 0.5044419707800358, 0.02320651712444717,
    -0.700768575373573, 0.5044419707800358, 0.5044419707800358, 0.02320651712444717,
    0.700768575373573, -0.5044419707800358, 0.5044419707800358, 0.02320651712444717,
    0.700768575373573, 0.5044419707800358, -0.5044419707800358, 0.02320651712444717,
    -0.700768575373573, -0.5044419707800358, 0.5044419707800358, 0.02320651712444717,
    -0.700768575373573, 0.5044419707800358, -0.5044419707800358, 0.02320651712444717,
    0.700768575373573, -0.5044419707800358, -0.5044419707800358, 0.02320651712444717,
    -0.700768575373573, -0.5044419707800358, -0.5044419707800358, 0.02320651712444717,
    0.4215761784010967, 0.4215761784010967, 0.8028368773352738, 0.02285159031614609,
    -0.4215761784010967, 0.4215761784010967, 0.8028368773352738, 0.02285159031614609,
    0.4215761784010967, -0.4215761784010967, 0.8028368773352738, 0.02285159031614609,
    0.4215761784010967, 0.4215761784010967, -0.8028368773352738, 0.02285159031614609,
    -0.4215761784010967, -0.4215761784010967, 0.8028368773352738, 0.02285159031614609,
    -0.4215761784010967, 0.4215761784010967, -0.8028368773352738, 0.02285159031614609,
    0.4215761784010967, -0.4215761784010967, -0.8028368773352738, 0.02285159031614609,
    -0.4215761784010967, -0.4215761784010967, -0.8028368773352738, 0.02285159031614609,
    -0.4215761784010967, 0.8028368773352738, 0.4215761784010967, 0.02285159031614609,
    0.4215761784010967, -0.8028368773352738, 0.4215761784010967, 0.02285159031614609,
    0.4215761784010967, 0.8028368773352738, -0.4215761784010967, 0.02285159031614609,
    -0.4215761784010967, -0.8028368773352738, 0.4215761784010967, 0.02285159031614609,
    -0.4215761784010967, 0.8028368773352738, -0.4215761784010967, 0.02285159031614609,
    0.4215761784010967, -0.8028368773352738, -0.4215761784010967, 0.02285159031614609,
    -0.4215761784010967, -0.8028368773352738, -0.4215761784010967, 0.02285159031614609,
    0.4215761784010967, 0.8028368773352738, 0.4215761784010967, 0.02285159031614609,
    0.8028368773352738, 0.4215761784010967, 0.4215761784010967, 0.02285159031614609,
    -0.8028368773352738, 0.4215761784010967, 0.4215761784010967, 0.02285159031614609,
    0.8028368773352738, -0.4215761784010967, 0.4215761784010967, 0.02285159031614609,
    0.8028368773352738, 0.4215761784010967, -0.4215761784010967, 0.02285159031614609,
    -0.8028368773352738, -0.4215761784010967, 0.4215761784010967, 0.02285159031614609,
    -0.8028368773352738, 0.4215761784010967, -0.4215761784010967, 0.02285159031614609,
    0.8028368773352738, -0.4215761784010967, -0.4215761784010967, 0.02285159031614609,
    -0.8028368773352738, -0.4215761784010967, -0.4215761784010967, 0.02285159031614609,
    0.3317920736472123, 0.3317920736472123, 0.8830787279341326, 0.02198567789717927,
    -0.3317920736472123, 0.3317920736472123, 0.8830787279341326, 0.02198567789717927,
    0.3317920736472123, -0.3317920736472123, 0.8830787279341326, 0.02198567789717927,
    0.3317920736472123, 0.3317920736472123, -0.8830787279341326, 0.02198567789717927,
    -0.3317920736472123, -0.3317920736472123, 0.8830787279341326, 0.02198567789717927,
    -0.3317920736472123, 0.3317920736472123, -0.8830787279341326, 0.02198567789717927,
    0.3317920736472123, -0.3317920736472123, -0.8830787279341326, 0.02198567789717927,
    -0.3317920736472123, -0.3317920736472123, -0.8830787279341326, 0.02198567789717927,
    -0.3317920736472123, 0.8830787279341326, 0.3317920736472123, 0.02198567789717927,
    0.3317920736472123, -0.8830787279341326, 0.3317920736472123, 0.02198567789717927,
    0.3317920736472123, 0.8830787279341326, -0.3317920736472123, 0.02198567789717927,
    -0.3317920736472123, -0.8830787279341326, 0.3317920736472123, 0.02198567789717927,
    -0.3317920736472123, 0.8830787279341326, -0.3317920736472123, 0.02198567789717927,
    0.3317920736472123, -0.8830787279341326, -0.3317920736472123, 0.02198567789717927,
    -0.3317920736472123, -0.8830787279341326, -0.3317920736472123, 0.02198567789717927,
    0.3317920736472123, 0.8830787279341326, 0.3317920736472123, 0.02198567789717927,
    0.8830787279341326, 0.3317920736472123, 0.3317920736472123, 0.02198567789717927,
    -0.8830787279341326, 0.3317920736472123, 0.3317920736472123, 0.02198567789717927,
    0.8830787279341326, -0.3317920736472123, 0.3317920736472123, 0.02198567789717927,
    0.8830787279341326, 0.3317920736472123, -0.3317920736472123, 0.02198567789717927,
    -0.8830787279341326, -0.3317920736472123, 0.3317920736472123, 0.02198567789717927,
    -0.8830787279341326, 0.3317920736472123, -0.3317920736472123, 0.02198567789717927,
    0.8830787279341326, -0.3317920736472123, -0.3317920736472123, 0.02198567789717927,
    -0.8830787279341326, -0.3317920736472123, -0.3317920736472123, 0.02198567789717927,
    0.2384736701421887, 0.2384736701421887, 0.9414141582204025, 0.02032246835488661,
    -0.2384736701421887, 0.2384736701421887, 0.9414141582204025, 0.02032246835488661,
    0.2384736701421887, -0.2384736701421887, 0.9414141582204025, 0.02032246835488661,
    0.2384736701421887, 0.2384736701421887, -0.9414141582204025, 0.02032246835488661,
    -0.2384736701421887, -0.2384736701421887, 0.9414141582204025, 0.02032246835488661,
    -0.2384736701421887, 0.2384736701421887, -0.9414141582204025, 0.02032246835488661,
    0.2384736701421887, -0.2384736701421887, -0.9414141582204025, 0.02032246835488661,
    -0.2384736701421887, -0.2384736701421887, -0.9414141582204025, 0.02032246835488661,
    -0.2384736701421887, 0.9414141582204025, 0.2384736701421887, 0.02032246835488661,
    0.2384736701421887, -0.9414141582204025, 0.2384736701421887, 0.02032246835488661,
    0.2384736701421887, 0.9414141582204025, -0.2384736701421887, 0.02032246835488661,
    -0.2384736701421887, -0.9414141582204025, 0.2384736701421887, 0.02032246835488661,
    -0.2384736701421887, 0.9414141582204025, -0.2384736701421887, 0.02032246835488661,
    0.2384736701421887, -0.9414141582204025, -0.2384736701421887, 0.02032246835488661,
    -0.2384736701421887, -0.9414141582204025, -0.2384736701421887, 0.02032246835488661,
    0.2384736701421887, 0.9414141582204025, 0.2384736701421887, 0.02032246835488661,
    0.9414141582204025, 0.2384736701421887, 0.2384736701421887, 0.02032246835488661,
    -0.9414141582204025, 0.2384736701421887, 0.2384736701421887, 0.02032246835488661,
    0.9414141582204025, -0.2384736701421887, 0.2384736701421887, 0.02032246835488661,
    0.9414141582204025, 0.2384736701421887, -0.2384736701421887, 0.02032246835488661,
    -0.9414141582204025, -0.2384736701421887, 0.2384736701421887, 0.02032246835488661,
    -0.9414141582204025, 0.2384736701421887, -0.2384736701421887, 0.02032246835488661,
    0.9414141582204025, -0.2384736701421887, -0.2384736701421887, 0.02032246835488661,
    -0.9414141582204025, -0.2384736701421887, -0.2384736701421887, 0.02032246835488661,
    0.1459036449157763, 0.1459036449157763, 0.9784805837626939, 0.017401121296649277,
    -0.1459036449157763, 0.1459036449157763, 0.9784805837626939, 0.017401121296649277,
    0.1459036449157763, -0.1459036449157763, 0.9784805837626939, 0.017401121296649277,
    0.1459036449157763, 0.1459036449157763, -0.9784805837626939, 0.017401121296649277,
    -0.1459036449157763, -0.1459036449157763, 0.9784805837626939, 0.017401121296649277,
    -0.1459036449157763, 0.1459036449157763, -0.9784805837626939, 0.017401121296649277,
    0.1459036449157763, -0.1459036449157763, -0.9784805837626939, 0.017401121296649277,
    -0.1459036449157763, -0.1459036449157763, -0.9784805837626939, 0.017401121296649277,
    -0.1459036449157763, 0.9784805837626939, 0.1459036449157763, 0.017401121296649277,
    0.1459036449157763, -0.9784805837626939, 0.1459036449157763, 0.017401121296649277,
    0.1459036449157763, 0.9784805837626939, -0.1459036449157763, 0.017401121296649277,
    -0.1459036449157763, -0.9784805837626939, 0.1459036449157763, 0.017401121296649277,
    -0.1459036449157763, 0.9784805837626939, -0.1459036449157763, 0.017401121296649277,
    0.1459036449157763, -0.9784805837626939, -0.1459036449157763, 0.017401121296649277,
    -0.1459036449157763, -0.9784805837626939, -0.1459036449157763, 0.017401121296649277,
    0.1459036449157763, 0.9784805837626939, 0.1459036449157763, 0.017401121296649277,
    0.9784805837626939, 0.1459036449157763, 0.1459036449157763, 0.017401121296649277,
    -0.9784805837626939, 0.1459036449157763, 0.1459036449157763, 0.017401121296649277,
    0.9784805837626939, -0.1459036449157763, 0.1459036449157763, 0.017401121296649277,
    0.9784805837626939, 0.1459036449157763, -0.1459036449157763, 0.017401121296649277,
    -0.9784805837626939, -0.1459036449157763, 0.1459036449157763, 0.017401121296649277,
    -0.9784805837626939, 0.1459036449157763, -0.1459036449157763, 0.017401121296649277,
    0.9784805837626939, -0.1459036449157763, -0.1459036449157763, 0.017401121296649277,
    -0.9784805837626939, -0.1459036449157763, -0.1459036449157763, 0.017401121296649277,
    0.06095034115507196, 0.06095034115507196, 0.9962781297540164, 0.012270220422136898,
    -0.06095034115507196, 0.06095034115507196, 0.9962781297540164, 0.012270220422136898,
    0.06095034115507196, -0.06095034115507196, 0.9962781297540164, 0.012270220422136898,
    0.06095034115507196, 0.06095034115507196, -0.9962781297540164, 0.012270220422136898,
    -0.06095034115507196, -0.06095034115507196, 0.9962781297540164, 0.012270220422136898,
    -0.06095034115507196, 0.06095034115507196, -0.9962781297540164, 0.012270220422136898,
    0.06095034115507196, -0.06095034115507196, -0.9962781297540164, 0.012270220422136898,
    -0.06095034115507196, -0.06095034115507196, -0.9962781297540164, 0.012270220422136898,
    -0.06095034115507196, 0.9962781297540164, 0.06095034115507196, 0.012270220422136898,
    0.06095034115507196, -0.9962781297540164, 0.06095034115507196, 0.012270220422136898,
    0.06095034115507196, 0.9962781297540164, -0.06095034115507196, 0.012270220422136898,
    -0.06095034115507196, -0.9962781297540164, 0.06095034115507196, 0.012270220422136898,
    -0.06095034115507196, 0.9962781297540164, -0.06095034115507196, 0.012270220422136898,
    0.06095034115507196, -0.9962781297540164, -0.06095034115507196, 0.012270220422136898,
    -0.06095034115507196, -0.9962781297540164, -0.06095034115507196, 0.012270220422136898,
    0.06095034115507196, 0.9962781297540164, 0.06095034115507196, 0.012270220422136898,
    0.9962781297540164, 0.06095034115507196, 0.06095034115507196, 0.012270220422136898,
    -0.9962781297540164, 0.06095034115507196, 0.06095034115507196, 0.012270220422136898,
    0.9962781297540164, -0.06095034115507196, 0.06095034115507196, 0.012270220422136898,
    0.9962781297540164, 0.06095034115507196, -0.06095034115507196, 0.012270220422136898,
    -0.9962781297540164, -0.06095034115507196, 0.06095034115507196, 0.012270220422136898,
    -0.9962781297540164, 0.06095034115507196, -0.06095034115507196, 0.012270220422136898,
    0.9962781297540164, -0.06095034115507196, -0.06095034115507196, 0.012270220422136898,
    -0.9962781297540164, -0.06095034115507196, -0.06095034115507196, 0.012270220422136898,
    0.6116843442009876, 0.791101929626902, 0.0, 0.023337775889269885,
    -0.6116843442009876, 0.791101929626902, 0.0, 0.023337775889269885,
    0.6116843442009876, -0.791101929626902, 0.0, 0.023337775889269885,
    -0.6116843442009876, -0.791101929626902, 0.0, 0.023337775889269885,
    0.791101929626902, 0.6116843442009876, 0.0, 0.023337775889269885,
    -0.791101929626902, 0.6116843442009876, 0.0, 0.023337775889269885,
    0.791101929626902, -0.6116843442009876, 0.0, 0.023337775889269885,
    -0.791101929626902, -0.6116843442009876, 0.0, 0.023337775889269885,
    0.6116843442009876, 0.0, 0.791101929626902, 0.023337775889269885,
    -0.6116843442009876, 0.0, 0.791101929626902, 0.023337775889269885,
    0.6116843442009876, 0.0, -0.791101929626902, 0.023337775889269885,
    -0.6116843442009876, 0.0, -0.791101929626902, 0.023337775889269885,
    0.791101929626902, 0.0, 0.6116843442009876, 0.023337775889269885,
    -0.791101929626902, 0.0, 0.6116843442009876, 0.023337775889269885,
    0.791101929626902, 0.0, -0.6116843442009876, 0.023337775889269885,
    -0.791101929626902, 0.0, -0.6116843442009876, 0.023337775889269885,
    0.0, 0.6116843442009876, 0.791101929626902, 0.023337775889269885,
    0.0, -0.6116843442009876, 0.791101929626902, 0.023337775889269885,
    0.0, 0.6116843442009876, -0.791101929626902, 0.023337775889269885,
    0.0, -0.6116843442009876, -0.791101929626902, 0.023337775889269885,
    0.0, 0.791101929626902, 0.6116843442009876, 0.023337775889269885,
    0.0, -0.791101929626902, 0.6116843442009876, 0.023337775889269885,
    0.0, 0.791101929626902, -0.6116843442009876, 0.023337775889269885,
    0.0, -0.791101929626902, -0.6116843442009876, 0.023337775889269885,
    0.3964755348199858, 0.918045287711454, 0.0, 0.021427597073266094,
    -0.3964755348199858, 0.918045287711454, 0.0, 0.021427597073266094,
    0.3964755348199858, -0.918045287711454, 0.0, 0.021427597073266094,
    -0.3964755348199858, -0.918045287711454, 0.0, 0.021427597073266094,
    0.918045287711454, 0.3964755348199858, 0.0, 0.021427597073266094,
    -0.918045287711454, 0.3964755348199858, 0.0, 0.021427597073266094,
    0.918045287711454, -0.3964755348199858, 0.0, 0.021427597073266094,
    -0.918045287711454, -0.3964755348199858, 0.0, 0.021427597073266094,
    0.3964755348199858, 0.0, 0.918045287711454, 0.021427597073266094,
    -0.3964755348199858, 0.0, 0.918045287711454, 0.021427597073266094,
    0.3964755348199858, 0.0, -0.918045287711454, 0.021427597073266094,
    -0.3964755348199858, 0.0, -0.918045287711454, 0.021427597073266094,
    0.918045287711454, 0.0, 0.3964755348199858, 0.021427597073266094,
    -0.918045287711454, 0.0, 0.3964755348199858, 0.021427597073266094,
    0.918045287711454, 0.0, -0.3964755348199858, 0.021427597073266094,
    -0.918045287711454, 0.0, -0.3964755348199858, 0.021427597073266094,
    0.0, 0.3964755348199858, 0.918045287711454, 0.021427597073266094,
    0.0, -0.3964755348199858, 0.918045287711454, 0.021427597073266094,
    0.0, 0.3964755348199858, -0.918045287711454, 0.021427597073266094,
    0.0, -0.3964755348199858, -0.918045287711454, 0.021427597073266094,
    0.0, 0.918045287711454, 0.3964755348199858, 0.021427597073266094,
    0.0, -0.918045287711454, 0.3964755348199858, 0.021427597073266094,
    0.0, 0.918045287711454, -0.3964755348199858, 0.021427597073266094,
    0.0, -0.918045287711454, -0.3964755348199858, 0.021427597073266094,
    0.1724782009907724, 0.9850133350280019, 0.0, 0.016340324222732412,
    -0.1724782009907724, 0.9850133350280019, 0.0, 0.016340324222732412,
    0.1724782009907724, -0.9850133350280019, 0.0, 0.016340324222732412,
    -0.1724782009907724, -0.9850133350280019, 0.0, 0.016340324222732412,
    0.9850133350280019, 0.1724782009907724, 0.0, 0.016340324222732412,
    -0.9850133350280019, 0.1724782009907724, 0.0, 0.016340324222732412,
    0.9850133350280019, -0.1724782009907724, 0.0, 0.016340324222732412,
    -0.9850133350280019, -0.1724782009907724, 0.0, 0.016340324222732412,
    0.1724782009907724, 0.0, 0.9850133350280019, 0.016340324222732412,
    -0.1724782009907724, 0.0, 0.9850133350280019, 0.016340324222732412,
    0.1724782009907724, 0.0, -0.9850133350280019, 0.016340324222732412,
    -0.1724782009907724, 0.0, -0.9850133350280019, 0.016340324222732412,
    0.9850133350280019, 0.0, 0.1724782009907724, 0.016340324222732412,
    -0.9850133350280019, 0.0, 0.1724782009907724, 0.016340324222732412,
    0.9850133350280019, 0.0, -0.1724782009907724, 0.016340324222732412,
    -0.9850133350280019, 0.0, -0.1724782009907724, 0.016340324222732412,
    0.0, 0.1724782009907724, 0.9850133350280019, 0.016340324222732412,
    0.0, -0.1724782009907724, 0.9850133350280019, 0.016340324222732412,
    0.0, 0.1724782009907724, -0.9850133350280019, 0.016340324222732412,
    0.0, -0.1724782009907724, -0.9850133350280019, 0.016340324222732412,
    0.0, 0.9850133350280019, 0.1724782009907724, 0.016340324222732412,
    0.0, -0.9850133350280019, 0.1724782009907724, 0.016340324222732412,
    0.0, 0.9850133350280019, -0.1724782009907724, 0.016340324222732412,
    0.0, -0.9850133350280019, -0.1724782009907724, 0.016340324222732412,
    0.561026380862206, 0.3518280927733519, 0.7493106119041159, 0.02315814309130472,
    -0.561026380862206, 0.3518280927733519, 0.7493106119041159, 0.02315814309130472,
    0.561026380862206, -0.3518280927733519, 0.7493106119041159, 0.02315814309130472,
    0.561026380862206, 0.3518280927733519, -0.7493106119041159, 0.02315814309130472,
    -0.561026380862206, -0.3518280927733519, 0.7493106119041159, 0.02315814309130472,
    0.561026380862206, -0.3518280927733519, -0.7493106119041159, 0.02315814309130472,
    -0.561026380862206, 0.3518280927733519, -0.7493106119041159, 0.02315814309130472,
    -0.561026380862206, -0.3518280927733519, -0.7493106119041159, 0.02315814309130472,
    0.3518280927733519, 0.561026380862206, 0.7493106119041159, 0.02315814309130472,
    -0.3518280927733519, 0.561026380862206, 0.7493106119041159, 0.02315814309130472,
    0.3518280927733519, -0.561026380862206, 0.7493106119041159, 0.02315814309130472,
    0.3518280927733519, 0.561026380862206, -0.7493106119041159, 0.02315814309130472,
    -0.3518280927733519, -0.561026380862206, 0.7493106119041159, 0.02315814309130472,
    0.3518280927733519, -0.561026380862206, -0.7493106119041159, 0.02315814309130472,
    -0.3518280927733519, 0.561026380862206, -0.7493106119041159, 0.02315814309130472,
    -0.3518280927733519, -0.561026380862206, -0.7493106119041159, 0.02315814309130472,
    0.7493106119041159, 0.561026380862206, 0.3518280927733519, 0.02315814309130472,
    -0.7493106119041159, 0.561026380862206, 0.3518280927733519, 0.02315814309130472,
    0.7493106119041159, -0.561026380862206, 0.3518280927733519, 0.02315814309130472,
    0.7493106119041159, 0.561026380862206, -0.3518280927733519, 0.02315814309130472,
    -0.7493106119041159, -0.561026380862206, 0.3518280927733519, 0.02315814309130472,
    0.7493106119041159, -0.561026380862206, -0.3518280927733519, 0.02315814309130472,
    -0.7493106119041159, 0.561026380862206, -0.3518280927733519, 0.02315814309130472,
    -0.7493106119041159, -0.561026380862206, -0.3518280927733519, 0.02315814309130472,
    0.7493106119041159, 0.3518280927733519, 0.561026380862206, 0.02315814309130472,
    -0.7493106119041159, 0.3518280927733519, 0.561026380862206, 0.02315814309130472,
    0.7493106119041159, -0.3518280927733519, 0.561026380862206, 0.02315814309130472,
    0.7493106119041159, 0.3518280927733519, -0.561026380862206, 0.02315814309130472,
    -0.7493106119041159, -0.3518280927733519, 0.561026380862206, 0.02315814309130472,
    0.7493106119041159, -0.3518280927733519, -0.561026380862206, 0.02315814309130472,
    -0.7493106119041159, 0.3518280927733519, -0.561026380862206, 0.02315814309130472,
    -0.7493106119041159, -0.3518280927733519, -0.561026380862206, 0.02315814309130472,
    0.561026380862206, 0.7493106119041159, 0.3518280927733519, 0.02315814309130472,
    -0.561026380862206, 0.7493106119041159, 0.3518280927733519, 0.02315814309130472,
    0.561026380862206, -0.7493106119041159, 0.3518280927733519, 0.02315814309130472,
    0.561026380862206, 0.7493106119041159, -0.3518280927733519, 0.02315814309130472,
    -0.561026380862206, -0.7493106119041159, 0.3518280927733519, 0.02315814309130472,
    0.561026380862206, -0.7493106119041159, -0.3518280927733519, 0.02315814309130472,
    -0.561026380862206, 0.7493106119041159, -0.3518280927733519, 0.02315814309130472,
    -0.561026380862206, -0.7493106119041159, -0.3518280927733519, 0.02315814309130472,
    0.3518280927733519, 0.7493106119041159, 0.561026380862206, 0.02315814309130472,
    -0.3518280927733519, 0.7493106119041159, 0.561026380862206, 0.02315814309130472,
    0.3518280927733519, -0.7493106119041159, 0.561026380862206, 0.02315814309130472,
    0.3518280927733519, 0.7493106119041159, -0.561026380862206, 0.02315814309130472,
    -0.3518280927733519, -0.7493106119041159, 0.561026380862206, 0.02315814309130472,
    0.3518280927733519, -0.7493106119041159, -0.561026380862206, 0.02315814309130472,
    -0.3518280927733519, 0.7493106119041159, -0.561026380862206, 0.02315814309130472,
    -0.3518280927733519, -0.7493106119041159, -0.561026380862206, 0.02315814309130472,
    0.474239284255198, 0.263471665593795, 0.8400474883590504, 0.02265288026067282,
    -0.474239284255198, 0.263471665593795, 0.8400474883590504, 0.02265288026067282,
    0.474239284255198, -0.263471665593795, 0.8400474883590504, 0.02265288026067282,
    0.474239284255198, 0.263471665593795, -0.8400474883590504, 0.02265288026067282,
    -0.474239284255198, -0.263471665593795, 0.8400474883590504, 0.02265288026067282,
    0.474239284255198, -0.263471665593795, -0.8400474883590504, 0.02265288026067282,
    -0.474239284255198, 0.263471665593795, -0.8400474883590504, 0.02265288026067282,
    -0.474239284255198, -0.263471665593795, -0.8400474883590504, 0.02265288026067282,
    0.263471665593795, 0.474239284255198, 0.8400474883590504, 0.02265288026067282,
    -0.263471665593795, 0.474239284255198, 0.8400474883590504, 0.02265288026067282,
    0.263471665593795, -0.474239284255198, 0.8400474883590504, 0.02265288026067282,
    0.263471665593795, 0.474239284255198, -0.8400474883590504, 0.02265288026067282,
    -0.263471665593795, -0.474239284255198, 0.8400474883590504, 0.02265288026067282,
    0.263471665593795, -0.474239284255198, -0.8400474883590504, 0.02265288026067282,
    -0.263471665593795, 0.474239284255198, -0.8400474883590504, 0.02265288026067282,
    -0.263471665593795, -0.474239284255198, -0.8400474883590504, 0.02265288026067282,
    0.8400474883590504, 0.474239284255198, 0.263471665593795, 0.02265288026067282,
    -0.8400474883590504, 0.474239284255198, 0.263471665593795, 0.02265288026067282,
    0.8400474883590504, -0.474239284255198, 0.263471665593795, 0.02265288026067282,
    0.8400474883590504, 0.474239284255198, -0.263471665593795, 0.02265288026067282,
    -0.8400474883590504, -0.474239284255198, 0.263471665593795, 0.02265288026067282,
    0.8400474883590504, -0.474239284255198, -0.263471665593795, 0.02265288026067282,
    -0.8400474883590504, 0.474239284255198, -0.263471665593795, 0.02265288026067282,
    -0.8400474883590504, -0.474239284255198, -0.263471665593795, 0.02265288026067282,
    0.8400474883590504, 0.263471665593795, 0.474239284255198, 0.02265288026067282,
    -0.8400474883590504, 0.263471665593795, 0.474239284255198, 0.02265288026067282,
    0.8400474883590504, -0.263471665593795, 0.474239284255198, 0.02265288026067282,
    0.8400474883590504, 0.263471665593795, -0.474239284255198, 0.02265288026067282,
    -0.8400474883590504, -0.263471665593795, 0.474239284255198, 0.02265288026067282,
    0.8400474883590504, -0.263471665593795, -0.474239284255198, 0.02265288026067282,
    -0.8400474883590504, 0.263471665593795, -0.474239284255198, 0.02265288026067282,
    -0.8400474883590504, -0.263471665593795, -0.474239284255198, 0.02265288026067282,
    0.474239284255198, 0.8400474883590504, 0.263471665593795, 0.02265288026067282,
    -0.474239284255198, 0.8400474883590504, 0.263471665593795, 0.02265288026067282,
    0.474239284255198, -0.8400474883590504, 0.263471665593795, 0.02265288026067282,
    0.474239284255198, 0.8400474883590504, -0.263471665593795, 0.02265288026067282,
    -0.474239284255198, -0.8400474883590504, 0.263471665593795, 0.02265288026067282,
    0.474239284255198, -0.8400474883590504, -0.263471665593795, 0.02265288026067282,
    -0.474239284255198, 0.8400474883590504, -0.263471665593795, 0.02265288026067282,
    -0.474239284255198, -0.8400474883590504, -0.263471665593795, 0.02265288026067282,
    0.263471665593795, 0.8400474883590504, 0.474239284255198, 0.02265288026067282,
    -0.263471665593795, 0.8400474883590504, 0.474239284255198, 0.02265288026067282,
    0.263471665593795, -0.8400474883590504, 0.474239284255198, 0.02265288026067282,
    0.263471665593795, 0.8400474883590504, -0.474239284255198, 0.02265288026067282,
    -0.263471665593795, -0.8400474883590504, 0.474239284255198, 0.02265288026067282,
    0.263471665593795, -0.8400474883590504, -0.474239284255198, 0.02265288026067282,
    -0.263471665593795, 0.8400474883590504, -0.474239284255198, 0.02265288026067282,
    -0.263471665593795, -0.8400474883590504, -0.474239284255198, 0.02265288026067282,
    0.598412649788538, 0.1816640840360209, 0.7803207424799203, 0.02324565639630277,
    -0.598412649788538, 0.1816640840360209, 0.7803207424799203, 0.02324565639630277,
    0.598412649788538, -0.1816640840360209, 0.7803207424799203, 0.02324565639630277,
    0.598412649788538, 0.1816640840360209, -0.7803207424799203, 0.02324565639630277,
    -0.598412649788538, -0.1816640840360209, 0.7803207424799203, 0.02324565639630277,
    0.598412649788538, -0.1816640840360209, -0.7803207424799203, 0.02324565639630277,
    -0.598412649788538, 0.1816640840360209, -0.7803207424799203, 0.02324565639630277,
    -0.598412649788538, -0.1816640840360209, -0.7803207424799203, 0.02324565639630277,
    0.1816640840360209, 0.598412649788538, 0.7803207424799203, 0.02324565639630277,
    -0.1816640840360209, 0.598412649788538, 0.7803207424799203, 0.02324565639630277,
    0.1816640840360209, -0.598412649788538, 0.7803207424799203, 0.02324565639630277,
    0.1816640840360209, 0.598412649788538, -0.7803207424799203, 0.02324565639630277,
    -0.1816640840360209, -0.598412649788538, 0.7803207424799203, 0.02324565639630277,
    0.1816640840360209, -0.598412649788538, -0.7803207424799203, 0.02324565639630277,
    -0.1816640840360209, 0.598412649788538, -0.7803207424799203, 0.02324565639630277,
    -0.1816640840360209, -0.598412649788538, -0.7803207424799203, 0.02324565639630277,
    0.7803207424799203, 0.598412649788538, 0.1816640840360209, 0.02324565639630277,
    -0.7803207424799203, 0.598412649788538, 0.1816640840360209, 0.02324565639630277,
    0.7803207424799203, -0.598412649788538, 0.1816640840360209, 0.02324565639630277,
    0.7803207424799203, 0.598412649788538, -0.1816640840360209, 0.02324565639630277,
    -0.7803207424799203, -0.598412649788538, 0.1816640840360209, 0.02324565639630277,
    0.7803207424799203, -0.598412649788538, -0.1816640840360209, 0.02324565639630277,
    -0.7803207424799203, 0.598412649788538, -0.1816640840360209, 0.02324565639630277,
    -0.7803207424799203, -0.598412649788538, -0.1816640840360209, 0.02324565639630277,
    0.7803207424799203, 0.1816640840360209, 0.598412649788538, 0.02324565639630277,
    -0.7803207424799203, 0.1816640840360209, 0.598412649788538, 0.02324565639630277,
    0.7803207424799203, -0.1816640840360209, 0.598412649788538, 0.02324565639630277,
    0.7803207424799203, 0.1816640840360209, -0.598412649788538, 0.02324565639630277,
    -0.7803207424799203, -0.1816640840360209, 0.598412649788538, 0.02324565639630277,
    0.7803207424799203, -0.1816640840360209, -0.598412649788538, 0.02324565639630277,
    -0.7803207424799203, 0.1816640840360209, -0.598412649788538, 0.02324565639630277,
    -0.7803207424799203, -0.1816640840360209, -0.598412649788538, 0.02324565639630277,
    0.598412649788538, 0.7803207424799203, 0.1816640840360209, 0.02324565639630277,
    -0.598412649788538, 0.7803207424799203, 0.1816640840360209, 0.02324565639630277,
    0.598412649788538, -0.7803207424799203, 0.1816640840360209, 0.02324565639630277,
    0.598412649788538, 0.7803207424799203, -0.1816640840360209, 0.02324565639630277,
    -0.598412649788538, -0.7803207424799203, 0.1816640840360209, 0.02324565639630277,
    0.598412649788538, -0.7803207424799203, -0.1816640840360209, 0.02324565639630277,
    -0.598412649788538, 0.7803207424799203, -0.1816640840360209, 0.02324565639630277,
    -0.598412649788538, -0.7803207424799203, -0.1816640840360209, 0.02324565639630277,
    0.1816640840360209, 0.7803207424799203, 0.598412649788538, 0.02324565639630277,
    -0.1816640840360209, 0.7803207424799203, 0.598412649788538, 0.02324565639630277,
    0.1816640840360209, -0.7803207424799203, 0.598412649788538, 0.02324565639630277,
    0.1816640840360209, 0.7803207424799203, -0.598412649788538, 0.02324565639630277,
    -0.1816640840360209, -0.7803207424799203, 0.598412649788538, 0.02324565639630277,
    0.1816640840360209, -0.7803207424799203, -0.598412649788538, 0.02324565639630277,
    -0.1816640840360209, 0.7803207424799203, -0.598412649788538, 0.02324565639630277,
    -0.1816640840360209, -0.7803207424799203, -0.598412649788538, 0.02324565639630277,
    0.3791035407695563, 0.1720795225656878, 0.9092134750923736, 0.02153755923392349,
    -0.3791035407695563, 0.1720795225656878, 0.9092134750923736, 0.02153755923392349,
    0.3791035407695563, -0.1720795225656878, 0.9092134750923736, 0.02153755923392349,
    0.3791035407695563, 0.1720795225656878, -0.9092134750923736, 0.02153755923392349,
    -0.3791035407695563, -0.1720795225656878, 0.9092134750923736, 0.02153755923392349,
    0.3791035407695563, -0.1720795225656878, -0.9092134750923736, 0.02153755923392349,
    -0.3791035407695563, 0.1720795225656878, -0.9092134750923736, 0.02153755923392349,
    -0.3791035407695563, -0.1720795225656878, -0.9092134750923736, 0.02153755923392349,
    0.1720795225656878, 0.3791035407695563, 0.9092134750923736, 0.02153755923392349,
    -0.1720795225656878, 0.3791035407695563, 0.9092134750923736, 0.02153755923392349,
    0.1720795225656878, -0.3791035407695563, 0.9092134750923736, 0.02153755923392349,
    0.1720795225656878, 0.3791035407695563, -0.9092134750923736, 0.02153755923392349,
    -0.1720795225656878, -0.3791035407695563, 0.9092134750923736, 0.02153755923392349,
    0.1720795225656878, -0.3791035407695563, -0.9092134750923736, 0.02153755923392349,
    -0.1720795225656878, 0.3791035407695563, -0.9092134750923736, 0.02153755923392349,
    -0.1720795225656878, -0.3791035407695563, -0.9092134750923736, 0.02153755923392349,
    0.9092134750923736, 0.3791035407695563, 0.1720795225656878, 0.02153755923392349,
    -0.9092134750923736, 0.3791035407695563, 0.1720795225656878, 0.02153755923392349,
    0.9092134750923736, -0.3791035407695563, 0.1720795225656878, 0.02153755923392349,
    0.9092134750923736, 0.3791035407695563, -0.1720795225656878, 0.02153755923392349,
    -0.9092134750923736, -0.3791035407695563, 0.1720795225656878, 0.02153755923392349,
    0.9092134750923736, -0.3791035407695563, -0.1720795225656878, 0.02153755923392349,
    -0.9092134750923736, 0.3791035407695563, -0.1720795225656878, 0.02153755923392349,
    -0.9092134750923736, -0.3791035407695563, -0.1720795225656878, 0.02153755923392349,
    0.9092134750923736, 0.1720795225656878, 0.3791035407695563, 0.02153755923392349,
    -0.9092134750923736, 0.1720795225656878, 0.3791035407695563, 0.02153755923392349,
    0.9092134750923736, -0.1720795225656878, 0.3791035407695563, 0.02153755923392349,
    0.9092134750923736, 0.1720795225656878, -0.3791035407695563, 0.02153755923392349,
    -0.9092134750923736, -0.1720795225656878, 0.3791035407695563, 0.02153755923392349,
    0.9092134750923736, -0.1720795225656878, -0.3791035407695563, 0.02153755923392349,
    -0.9092134750923736, 0.1720795225656878, -0.3791035407695563, 0.02153755923392349,
    -0.9092134750923736, -0.1720795225656878, -0.3791035407695563, 0.02153755923392349,
    0.3791035407695563, 0.9092134750923736, 0.1720795225656878, 0.02153755923392349,
    -0.3791035407695563, 0.9092134750923736, 0.1720795225656878, 0.02153755923392349,
    0.3791035407695563, -0.9092134750923736, 0.1720795225656878, 0.02153755923392349,
    0.3791035407695563, 0.9092134750923736, -0.1720795225656878, 0.02153755923392349,
    -0.3791035407695563, -0.9092134750923736, 0.1720795225656878, 0.02153755923392349,
    0.3791035407695563, -0.9092134750923736, -0.1720795225656878, 0.02153755923392349,
    -0.3791035407695563, 0.9092134750923736, -0.1720795225656878, 0.02153755923392349,
    -0.3791035407695563, -0.9092134750923736, -0.1720795225656878, 0.02153755923392349,
    0.1720795225656878, 0.9092134750923736, 0.3791035407695563, 0.02153755923392349,
    -0.1720795225656878, 0.9092134750923736, 0.3791035407695563, 0.02153755923392349,
    0.1720795225656878, -0.9092134750923736, 0.3791035407695563, 0.02153755923392349,
    0.1720795225656878, 0.9092134750923736, -0.3791035407695563, 0.02153755923392349,
    -0.1720795225656878, -0.9092134750923736, 0.3791035407695563, 0.02153755923392349,
    0.1720795225656878, -0.9092134750923736, -0.3791035407695563, 0.02153755923392349,
    -0.1720795225656878, 0.9092134750923736, -0.3791035407695563, 0.02153755923392349,
    -0.1720795225656878, -0.9092134750923736, -0.3791035407695563, 0.02153755923392349,
    0.2778673190586244, 0.08213021581932511, 0.9571020743100725, 0.01954339052477729,
    -0.2778673190586244, 0.08213021581932511, 0.9571020743100725, 0.01954339052477729,
    0.2778673190586244, -0.08213021581932511, 0.9571020743100725, 0.01954339052477729,
    0.2778673190586244, 0.08213021581932511, -0.9571020743100725, 0.01954339052477729,
    -0.2778673190586244, -0.08213021581932511, 0.9571020743100725, 0.01954339052477729,
    0.2778673190586244, -0.08213021581932511, -0.9571020743100725, 0.01954339052477729,
    -0.2778673190586244, 0.08213021581932511, -0.9571020743100725, 0.01954339052477729,
    -0.2778673190586244, -0.08213021581932511, -0.9571020743100725, 0.01954339052477729,
    0.08213021581932511, 0.2778673190586244, 0.9571020743100725, 0.01954339052477729,
    -0.08213021581932511, 0.2778673190586244, 0.9571020743100725, 0.01954339052477729,
    0.08213021581932511, -0.2778673190586244, 0.9571020743100725, 0.01954339052477729,
    0.08213021581932511, 0.2778673190586244, -0.9571020743100725, 0.01954339052477729,
    -0.08213021581932511, -0.2778673190586244, 0.9571020743100725, 0.01954339052477729,
    0.08213021581932511, -0.2778673190586244, -0.9571020743100725, 0.01954339052477729,
    -0.08213021581932511, 0.2778673190586244, -0.9571020743100725, 0.01954339052477729,
    -0.08213021581932511, -0.2778673190586244, -0.9571020743100725, 0.01954339052477729,
    0.9571020743100725, 0.2778673190586244, 0.08213021581932511, 0.01954339052477729,
    -0.9571020743100725, 0.2778673190586244, 0.08213021581932511, 0.01954339052477729,
    0.9571020743100725, -0.2778673190586244, 0.08213021581932511, 0.01954339052477729,
    0.9571020743100725, 0.2778673190586244, -0.08213021581932511, 0.01954339052477729,
    -0.9571020743100725, -0.2778673190586244, 0.08213021581932511, 0.01954339052477729,
    0.9571020743100725, -0.2778673190586244, -0.08213021581932511, 0.01954339052477729,
    -0.9571020743100725, 0.2778673190586244, -0.08213021581932511, 0.01954339052477729,
    -0.9571020743100725, -0.2778673190586244, -0.08213021581932511, 0.01954339052477729,
    0.9571020743100725, 0.08213021581932511, 0.2778673190586244, 0.01954339052477729,
    -0.9571020743100725, 0.08213021581932511, 0.2778673190586244, 0.01954339052477729,
    0.9571020743100725, -0.08213021581932511, 0.2778673190586244, 0.01954339052477729,
    0.9571020743100725, 0.08213021581932511, -0.2778673190586244, 0.01954339052477729,
    -0.9571020743100725, -0.08213021581932511, 0.2778673190586244, 0.01954339052477729,
    0.9571020743100725, -0.08213021581932511, -0.2778673190586244, 0.01954339052477729,
    -0.9571020743100725, 0.08213021581932511, -0.2778673190586244, 0.01954339052477729,
    -0.9571020743100725, -0.08213021581932511, -0.2778673190586244, 0.01954339052477729,
    0.2778673190586244, 0.9571020743100725, 0.08213021581932511, 0.01954339052477729,
    -0.2778673190586244, 0.9571020743100725, 0.08213021581932511, 0.01954339052477729,
    0.2778673190586244, -0.9571020743100725, 0.08213021581932511, 0.01954339052477729,
    0.2778673190586244, 0.9571020743100725, -0.08213021581932511, 0.01954339052477729,
    -0.2778673190586244, -0.9571020743100725, 0.08213021581932511, 0.01954339052477729,
    0.2778673190586244, -0.9571020743100725, -0.08213021581932511, 0.01954339052477729,
    -0.2778673190586244, 0.9571020743100725, -0.08213021581932511, 0.01954339052477729,
    -0.2778673190586244, -0.9571020743100725, -0.08213021581932511, 0.01954339052477729,
    0.08213021581932511, 0.9571020743100725, 0.2778673190586244, 0.01954339052477729,
    -0.08213021581932511, 0.9571020743100725, 0.2778673190586244, 0.01954339052477729,
    0.08213021581932511, -0.9571020743100725, 0.2778673190586244, 0.01954339052477729,
    0.08213021581932511, 0.9571020743100725, -0.2778673190586244, 0.01954339052477729,
    -0.08213021581932511, -0.9571020743100725, 0.2778673190586244, 0.01954339052477729,
    0.08213021581932511, -0.9571020743100725, -0.2778673190586244, 0.01954339052477729,
    -0.08213021581932511, 0.9571020743100725, -0.2778673190586244, 0.01954339052477729,
    -0.08213021581932511, -0.9571020743100725, -0.2778673190586244, 0.01954339052477729,
    0.5033564271075117, 0.08999205842074876, 0.8593798558907212, 0.022647604818254626,
    -0.5033564271075117, 0.08999205842074876, 0.8593798558907212, 0.022647604818254626,
    0.5033564271075117, -0.08999205842074876, 0.8593798558907212, 0.022647604818254626,
    0.5033564271075117, 0.08999205842074876, -0.8593798558907212, 0.022647604818254626,
    -0.5033564271075117, -0.08999205842074876, 0.8593798558907212, 0.022647604818254626,
    0.5033564271075117, -0.08999205842074876, -0.8593798558907212, 0.022647604818254626,
    -0.5033564271075117, 0.08999205842074876, -0.8593798558907212, 0.022647604818254626,
    -0.5033564271075117, -0.08999205842074876, -0.8593798558907212, 0.022647604818254626,
    0.08999205842074876, 0.5033564271075117, 0.8593798558907212, 0.022647604818254626,
    -0.08999205842074876, 0.5033564271075117, 0.8593798558907212, 0.022647604818254626,
    0.08999205842074876, -0.5033564271075117, 0.8593798558907212, 0.022647604818254626,
    0.08999205842074876, 0.5033564271075117, -0.8593798558907212, 0.022647604818254626,
    -0.08999205842074876, -0.5033564271075117, 0.8593798558907212, 0.022647604818254626,
    0.08999205842074876, -0.5033564271075117, -0.8593798558907212, 0.022647604818254626,
    -0.08999205842074876, 0.5033564271075117, -0.8593798558907212, 0.022647604818254626,
    -0.08999205842074876, -0.5033564271075117, -0.8593798558907212, 0.022647604818254626,
    0.8593798558907212, 0.5033564271075117, 0.08999205842074876, 0.022647604818254626,
    -0.8593798558907212, 0.5033564271075117, 0.08999205842074876, 0.022647604818254626,
    0.8593798558907212, -0.5033564271075117, 0.08999205842074876, 0.022647604818254626,
    0.8593798558907212, 0.5033564271075117, -0.08999205842074876, 0.022647604818254626,
    -0.8593798558907212, -0.5033564271075117, 0.08999205842074876, 0.022647604818254626,
    0.8593798558907212, -0.5033564271075117, -0.08999205842074876, 0.022647604818254626,
    -0.8593798558907212, 0.5033564271075117, -0.08999205842074876, 0.022647604818254626,
    -0.8593798558907212, -0.5033564271075117, -0.08999205842074876, 0.022647604818254626,
    0.8593798558907212, 0.08999205842074876, 0.5033564271075117, 0.022647604818254626,
    -0.8593798558907212, 0.08999205842074876, 0.5033564271075117, 0.022647604818254626,
    0.8593798558907212, -0.08999205842074876, 0.5033564271075117, 0.022647604818254626,
    0.8593798558907212, 0.08999205842074876, -0.5033564271075117, 0.022647604818254626,
    -0.8593798558907212, -0.08999205842074876, 0.5033564271075117, 0.022647604818254626,
    0.8593798558907212, -0.08999205842074876, -0.5033564271075117, 0.022647604818254626,
    -0.8593798558907212, 0.08999205842074876, -0.5033564271075117, 0.022647604818254626,
    -0.8593798558907212, -0.08999205842074876, -0.5033564271075117, 0.022647604818254626,
    0.5033564271075117, 0.8593798558907212, 0.08999205842074876, 0.022647604818254626,
    -0.5033564271075117, 0.8593798558907212, 0.08999205842074876, 0.022647604818254626,
    0.5033564271075117, -0.8593798558907212, 0.08999205842074876, 0.022647604818254626,
    0.5033564271075117, 0.8593798558907212, -0.08999205842074876, 0.022647604818254626,
    -0.5033564271075117, -0.8593798558907212, 0.08999205842074876, 0.022647604818254626,
    0.5033564271075117, -0.8593798558907212, -0.08999205842074876, 0.022647604818254626,
    -0.5033564271075117, 0.8593798558907212, -0.08999205842074876, 0.022647604818254626,
    -0.5033564271075117, -0.8593798558907212, -0.08999205842074876, 0.022647604818254626,
    0.08999205842074876, 0.8593798558907212, 0.5033564271075117, 0.022647604818254626,
    -0.08999205842074876, 0.8593798558907212, 0.5033564271075117, 0.022647604818254626,
    0.08999205842074876, -0.8593798558907212, 0.5033564271075117, 0.022647604818254626,
    0.08999205842074876, 0.8593798558907212, -0.5033564271075117, 0.022647604818254626,
    -0.08999205842074876, -0.8593798558907212, 0.5033564271075117, 0.022647604818254626,
    0.08999205842074876, -0.8593798558907212, -0.5033564271075117, 0.022647604818254626,
    -0.08999205842074876, 0.8593798558907212, -0.5033564271075117, 0.022647604818254626,
    -0.08999205842074876, -0.8593798558907212, -0.5033564271075117, 0.022647604818254626,
};

}  // namespace rvmb::lebedev_data

(self["webpackChunk"] = self["webpackChunk"] || []).push([[179], {
  1: function (module, exports, require) {
    module.exports = require(2);
  },
  2: function (module, exports, require) {
    exports.a = 1;
  }
}]);

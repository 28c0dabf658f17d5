/******/ (function() { // webpackBootstrap
/******/ 	var __webpack_modules__ = ({

/***/ "./node_modules/collectric/index.js":
/*!******************************************!*\
  !*** ./node_modules/collectric/index.js ***!
  \******************************************/
/***/ (function(module) {

function uniq(items) {
  var seen = {};
  return items.filter(function (item) {
    var key = typeof item + ':' + String(item);
    if (seen[key]) { return false; }
    seen[key] = true;
    return true;
  });
}
function groupBy(items, keyOf) {
  var out = {};
  for (var i = 0; i < items.length; i++) {
    var key = keyOf(items[i]);
    if (!out[key]) { out[key] = []; }
    out[key].push(items[i]);
  }
  return out;
}
function chunk(items, size) {
  var out = [];
  for (var i = 0; i < items.length; i += size) {
    out.push(items.slice(i, i + size));
  }
  return out;
}
function flatten(items) {
  var out = [];
  items.forEach(function (item) {
    if (Object.prototype.toString.call(item) === '[object Array]') {
      out = out.concat(flatten(item));
    } else {
      out.push(item);
    }
  });
  return out;
}
function keysOf(obj) {
  var out = [];
  for (var key in obj) {
    if (Object.prototype.hasOwnProperty.call(obj, key)) { out.push(key); }
  }
  return out;
}
function valuesOf(obj) {
  return keysOf(obj).map(function (key) { return obj[key]; });
}
function partition(items, predicate) {
  var yes = [];
  var no = [];
  for (var i = 0; i < items.length; i++) {
    (predicate(items[i]) ? yes : no).push(items[i]);
  }
  return [yes, no];
}
function countBy(items, keyOf) {
  var out = {};
  items.forEach(function (item) {
    var key = keyOf(item);
    out[key] = (out[key] || 0) + 1;
  });
  return out;
}

module.exports = { uniq: uniq, groupBy: groupBy, chunk: chunk, flatten: flatten };


/***/ })

/******/ 	});
/************************************************************************/
/******/ 	// The module cache
/******/ 	var __webpack_module_cache__ = {};
/******/ 	
/******/ 	// The require function
/******/ 	function __webpack_require__(moduleId) {
/******/ 		// Check if module is in cache
/******/ 		var cachedModule = __webpack_module_cache__[moduleId];
/******/ 		if (cachedModule !== undefined) {
/******/ 			return cachedModule.exports;
/******/ 		}
/******/ 		// Create a new module (and put it into the cache)
/******/ 		var module = __webpack_module_cache__[moduleId] = {
/******/ 			// no module.id needed
/******/ 			// no module.loaded needed
/******/ 			exports: {}
/******/ 		};
/******/ 	
/******/ 		// Execute the module function
/******/ 		if (!(moduleId in __webpack_modules__)) {
/******/ 			delete __webpack_module_cache__[moduleId];
/******/ 			var e = new Error("Cannot find module '" + moduleId + "'");
/******/ 			e.code = 'MODULE_NOT_FOUND';
/******/ 			throw e;
/******/ 		}
/******/ 		__webpack_modules__[moduleId](module, module.exports, __webpack_require__);
/******/ 	
/******/ 		// Return the exports of the module
/******/ 		return module.exports;
/******/ 	}
/******/ 	
/************************************************************************/
// This entry needs to be wrapped in an IIFE because it needs to be isolated against other modules in the chunk.
!function() {
/*!******************!*\
  !*** ./entry.js ***!
  \******************/
var lib = __webpack_require__(/*! collectric */ "./node_modules/collectric/index.js");
console.log(lib);

}();
/******/ })()
;
(function(){var n={578:function(n){function r(n,r){var e=String(n);if(e.length>=r){return e}return new Array(r-e.length+1).join(" ")+e}function e(n){return n.replace(/\s+/g," ").replace(/^ | $/g,"")}function t(n){var r=n.split("-");var e=r[0];for(var t=1;t<r.length;t++){e+=r[t].charAt(0).toUpperCase()+r[t].slice(1)}return e}function i(n,r){var e=0;var t=n.indexOf(r);while(t!==-1){e++;t=n.indexOf(r,t+r.length)}return e}function o(n,r){var e="";for(var t=0;t<r;t++){e+=n}return e}function u(n,r){return n.lastIndexOf(r,0)===0}function a(n,r){var e=n.length-r.length;return e>=0&&n.indexOf(r,e)===e}function c(n,r){return n.replace(/\{(\w+)\}/g,function(n,e){return e in r?String(r[e]):n})}function f(n){var r=n.split(/\r?\n/);while(r.length>0&&r[r.length-1]===""){r.pop()}return r}n.exports={pad:r,collapse:e,camel:t,count:i}}};var r={};function e(t){var i=r[t];if(i!==undefined){return i.exports}var o=r[t]={exports:{}};n[t](o,o.exports,e);return o.exports}var t=e(578);console.log(t)})();